"""Identity verification runner.

Evaluates both sides of an identity as exact truncated series and compares
them coefficient by coefficient on the common sound window, capped at the
requested order.  A ``pass`` means every coefficient on that window agrees
exactly; a ``fail`` reports the smallest mismatching exponent together with
the two coefficients; an ``error`` captures any evaluation problem (poles,
division by zero, bad arguments) as a diagnostic instead of a crash.

Suites of identities run in input order; with ``jobs > 1`` the evaluations
are distributed over a process pool but reports keep the input order, so
two runs with the same inputs produce identical output apart from timing.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cyclotomic import coeff_str, rat
from .errors import ParseError
from .series import QSeries, ceil_rat, floor_rat
from .dsl import IdentityRecord, eval_expr

__all__ = ["VerificationReport", "verify_identity", "run_suite",
           "reports_to_json", "DEFAULT_ORDER"]

DEFAULT_ORDER = 100

# how many times to re-evaluate at a padded order when negative valuations
# eat into the sound window
_MAX_EVAL_ROUNDS = 4


@dataclass
class VerificationReport:
    name: str
    status: str  # "pass" | "fail" | "error"
    order: int  # requested comparison order (q-units)
    first_mismatch: object = None  # Rat or None
    lhs_coeff: object = None  # CycRat or None
    rhs_coeff: object = None  # CycRat or None
    ms: int = 0
    message: object = None  # str or None (errors only)

    def to_dict(self):
        d = {
            "name": self.name,
            "status": self.status,
            "order": self.order,
            "first_mismatch": None if self.first_mismatch is None
            else str(self.first_mismatch),
            "lhs_coeff": None if self.lhs_coeff is None
            else coeff_str(self.lhs_coeff),
            "rhs_coeff": None if self.rhs_coeff is None
            else coeff_str(self.rhs_coeff),
            "ms": self.ms,
        }
        if self.message is not None:
            d["message"] = self.message
        return d


def effective_order(record: IdentityRecord, default_order=DEFAULT_ORDER,
                    force_order=None) -> int:
    """Resolve the comparison order: a run-wide override beats the record's
    own override, which beats the default."""
    if force_order is not None:
        return force_order
    if record.order_override is not None:
        return record.order_override
    return default_order


def _min_window(lhs: QSeries, rhs: QSeries):
    wl, wr = lhs.window_q(), rhs.window_q()
    if wl is None:
        return wr
    if wr is None:
        return wl
    return min(wl, wr)


def verify_identity(record: IdentityRecord, default_order=DEFAULT_ORDER,
                    force_order=None) -> VerificationReport:
    order = effective_order(record, default_order, force_order)
    t0 = time.perf_counter()

    def done(**kw):
        ms = int(round((time.perf_counter() - t0) * 1000))
        return VerificationReport(name=record.name, order=order, ms=ms, **kw)

    try:
        ev_order = order
        for _ in range(_MAX_EVAL_ROUNDS):
            lhs = eval_expr(record.lhs, ev_order)
            rhs = eval_expr(record.rhs, ev_order)
            window = _min_window(lhs, rhs)
            if window is None or window >= order:
                break
            # pad by the deficit (negative valuations shift windows by a
            # bounded offset) and try again
            ev_order += order - floor_rat(window) + 4
        lhs = lhs.truncate_q(order)
        rhs = rhs.truncate_q(order)
        diff = QSeries.first_difference(lhs, rhs)
    except Exception as exc:
        message = f"{type(exc).__name__}: {exc}"
        context = getattr(exc, "qverify_context", None)
        if context:
            message += f" [{context}]"
        return done(status="error", message=message)
    if diff is None:
        return done(status="pass")
    e, ca, cb = diff
    return done(status="fail", first_mismatch=e, lhs_coeff=ca, rhs_coeff=cb)


def _verify_star(args) -> VerificationReport:
    return verify_identity(*args)


def check_unique_names(records) -> None:
    seen = set()
    for r in records:
        if r.name in seen:
            raise ParseError(f"duplicate identity name {r.name!r}")
        seen.add(r.name)


def run_suite(records, default_order=DEFAULT_ORDER, force_order=None,
              jobs=1, progress=None):
    """Verify records in order; returns the list of reports (input order)."""
    records = list(records)
    check_unique_names(records)
    reports = []
    if jobs and jobs > 1 and len(records) > 1:
        work = [(r, default_order, force_order) for r in records]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rep in pool.map(_verify_star, work):
                reports.append(rep)
                if progress:
                    progress(rep)
    else:
        for r in records:
            rep = verify_identity(r, default_order, force_order)
            reports.append(rep)
            if progress:
                progress(rep)
    return reports


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def suite_exit_code(reports) -> int:
    if any(r.status == "error" for r in reports):
        return 2
    if any(r.status == "fail" for r in reports):
        return 1
    return 0
