"""Exception types raised across the package.

Errors that signal a resource limit (``GroupTooWide``, ``RelationTooLarge``,
``FormulaTooWide``) are not verdicts; the solvers turn them into an
indeterminate result.
"""


class BBSatError(Exception):
    pass


class EmptyClauseError(BBSatError):
    """A clause with no literals: the formula is trivially unsatisfiable."""


class ResourceLimit(BBSatError):
    pass


class GroupTooWide(ResourceLimit):
    def __init__(self, width, w_max):
        super().__init__(f"group width {width} exceeds w_max={w_max}")
        self.width = width
        self.w_max = w_max


class RelationTooLarge(ResourceLimit):
    def __init__(self, rows, r_max):
        super().__init__(f"relation would hold {rows} rows, r_max={r_max}")
        self.rows = rows
        self.r_max = r_max


class FormulaTooWide(ResourceLimit):
    def __init__(self, n, n_max):
        super().__init__(f"formula has {n} variables, n_max={n_max}")
        self.n = n
        self.n_max = n_max


class ExpansionTooLarge(ResourceLimit):
    pass


class OracleTooLarge(ResourceLimit):
    pass


class VarSetMismatch(BBSatError):
    pass


class BlockedGroupError(BBSatError):
    """Asked for the survivors of a group that has none."""


class Inapplicable(BBSatError):
    pass


class BlockedPairRequested(BBSatError):
    pass


class DimacsSyntaxError(BBSatError, ValueError):
    def __init__(self, message, line, column=None):
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.column = column
