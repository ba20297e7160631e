"""Run the grouped solver and the random search side by side.

The first definitive answer wins and the other lane is told to stop.  Both
lanes poll their cancel flag once per clause or candidate pair, so a loser
does at most one more unit of work after the signal.
"""

from __future__ import annotations

import enum
import queue
import threading
import time
from dataclasses import dataclass, field

from . import grouped, randsearch
from .config import SolverConfig
from .errors import ResourceLimit
from .model import Formula
from .verdict import Outcome, Progress, Reason, Verdict

ENGINES = (grouped.ENGINE, randsearch.ENGINE)


class LoserState(enum.Enum):
    CANCELLED = "cancelled"
    FINISHED = "finished"
    NOT_STARTED = "not_started"


class RaceDisagreement(AssertionError):
    pass


@dataclass(frozen=True)
class RaceResult:
    verdict: Verdict
    winner: str | None
    loser_state: LoserState | None
    wall_time: float
    loser_verdict: Verdict | None = None
    lanes: dict[str, Verdict] = field(default_factory=dict)
    # steps a lane took after its cancel signal, for lanes that were signalled
    cancel_lag: dict[str, int] = field(default_factory=dict)

    @property
    def outcome(self) -> Outcome:
        return self.verdict.outcome


class _Lane:
    def __init__(self, name, run):
        self.name = name
        self.run = run
        self.cancel = threading.Event()
        self.progress = Progress()
        self.started = threading.Event()
        self.verdict: Verdict | None = None
        self.thread: threading.Thread | None = None

    def start(self, results: queue.Queue):
        def main():
            self.started.set()
            try:
                self.verdict = self.run(self.cancel, self.progress)
                results.put((self, self.verdict, None))
            except BaseException as exc:  # surfaced in the controller thread
                results.put((self, None, exc))

        self.thread = threading.Thread(target=main, name=f"bbsat-{self.name}", daemon=True)
        self.thread.start()

    def signal(self):
        self.progress.steps_at_cancel = self.progress.steps
        self.cancel.set()


def _grouped_lane(f: Formula, cfg: SolverConfig):
    def run(cancel, progress):
        return grouped.solve_grouped(f, w_max=cfg.w_max, r_max=cfg.r_max, cancel=cancel, progress=progress)

    return _Lane(grouped.ENGINE, run)


def _random_lane(f: Formula, cfg: SolverConfig):
    def run(cancel, progress):
        try:
            return randsearch.solve_random(
                f, cfg.seed, cfg.pair_budget, n_max=cfg.n_max, cancel=cancel, progress=progress
            )
        except ResourceLimit as exc:
            return Verdict.indeterminate(randsearch.ENGINE, Reason.RESOURCE_CAP, detail=str(exc))

    return _Lane(randsearch.ENGINE, run)


def solve_race(f: Formula, config: SolverConfig | None = None) -> RaceResult:
    cfg = config or SolverConfig()
    t0 = time.perf_counter()
    lanes = [_grouped_lane(f, cfg), _random_lane(f, cfg)]
    results: queue.Queue = queue.Queue()
    for lane in lanes:
        lane.start(results)

    finished: dict[str, Verdict] = {}
    winner = None
    signalled: list[_Lane] = []
    loser_state = None
    while len(finished) < len(lanes):
        lane, verdict, exc = results.get()
        if exc is not None:
            for other in lanes:
                other.signal()
            raise exc
        finished[lane.name] = verdict
        if verdict.definitive and winner is None:
            winner = lane
            for other in lanes:
                if other is not lane and other.name not in finished:
                    loser_state = LoserState.CANCELLED if other.started.is_set() else LoserState.NOT_STARTED
                    other.signal()
                    signalled.append(other)
            if not cfg.test_mode:
                break

    if winner is None:
        reasons = "; ".join(
            f"{name}: {v.reason.value if v.reason else '?'} {v.detail}".strip() for name, v in finished.items()
        )
        verdict = Verdict.indeterminate(
            "race", Reason.RESOURCE_CAP, steps=max(v.steps for v in finished.values()), detail=reasons
        )
        return RaceResult(verdict, None, None, time.perf_counter() - t0, lanes=dict(finished))

    loser = next(lane for lane in lanes if lane is not winner)
    loser_verdict = finished.get(loser.name)
    if loser_verdict is not None and loser_verdict.reason is not Reason.CANCELLED:
        loser_state = LoserState.FINISHED
    elif loser_verdict is not None and loser_state is None:
        loser_state = LoserState.CANCELLED

    if cfg.test_mode:
        for lane in lanes:
            lane.thread.join()
        if loser_verdict is not None and loser_verdict.definitive:
            if loser_verdict.outcome is not winner.verdict.outcome:
                raise RaceDisagreement(
                    f"{winner.name} says {winner.verdict.outcome.value}, "
                    f"{loser.name} says {loser_verdict.outcome.value}"
                )

    lag = {
        lane.name: lane.progress.steps - lane.progress.steps_at_cancel
        for lane in signalled
        if lane.progress.steps_at_cancel is not None and lane.name in finished
    }
    return RaceResult(
        winner.verdict,
        winner.name,
        loser_state,
        time.perf_counter() - t0,
        loser_verdict=loser_verdict,
        lanes=dict(finished),
        cancel_lag=lag,
    )
