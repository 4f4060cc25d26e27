"""Run every theorem verifier over a corpus of instances."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import endo, invariants, rings
from .corpus import CorpusConfig, fingerprint, parse_instance
from .errors import CeilingError, FslabError
from .modules import submodule_lattice
from .report import jsonable, legend

log = logging.getLogger(__name__)

RING_CHECKS = (
    lambda R: rings.theorem0_check(R, "right"),
    lambda R: rings.theorem0_check(R, "left"),
    rings.jacobson_cross_check,
    rings.brauer_check,
    lambda R: rings.local_us_ring_check(R, "right"),
    lambda R: rings.local_us_ring_check(R, "left"),
)


def _semiprime(R):
    if not rings.is_semiprime(R):
        return rings.CheckResult("semiprime_proposition", True, hypothesis=False)
    return rings.semiprime_equivalence_check(R)


@dataclass
class SuiteResult:
    summary: dict
    failures: list
    skipped: list
    instances: list
    fingerprint: dict
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "corpus": self.fingerprint,
            "passed": self.passed,
            "summary": self.summary,
            "failures": self.failures,
            "skipped": self.skipped,
            "warnings": self.warnings,
            "instances": self.instances,
        }


def _outcome(res) -> str:
    if not res.passed:
        return "fail"
    return "pass" if res.hypothesis else "vacuous"


def run_instance(descriptor: dict) -> dict:
    """All applicable batteries on one instance; never raises for engine ceilings."""
    label = descriptor["label"]
    record = {"label": label, "status": "ok", "checks": {}, "skipped": []}
    failures = []
    try:
        inst = parse_instance(descriptor)
        M, R = inst.module, inst.ring
        lat = submodule_lattice(M)
    except CeilingError as exc:
        record["status"] = "skipped"
        record["skipped"].append({"battery": "all", "reason": str(exc), "ceiling": exc.ceiling, "found": exc.found})
        return {"record": record, "failures": failures}
    record["module_order"] = M.order
    record["ring_order"] = R.order
    record["lattice_nodes"] = len(lat)
    rep = invariants.classify(M)
    record["invariants"] = {
        "goldie_dim": rep.goldie_dim,
        "hollow_dim": rep.hollow_dim,
        "length": rep.length,
        "fs_small_count": rep.fs_small_count,
        "fsm_small_minimal_count": rep.fsm_small_minimal_count,
        "radical": list(rep.radical.elements),
        "socle": list(rep.socle.elements),
    }

    def record_check(res):
        record["checks"][res.name] = _outcome(res)
        if not res.passed:
            failures.append({"label": label, "check": res.name, "descriptor": descriptor,
                             "details": jsonable(res.details), "legend": legend(M)})

    batteries = [("module", invariants.MODULE_CHECKS, M)]
    if M.presentation.get("kind") == "regular":
        batteries.append(("ring", RING_CHECKS + (_semiprime,), R))
    if R.commutative:
        batteries.append(("symmetry", endo.SYMMETRY_CHECKS, M))
    for battery, checks, arg in batteries:
        for check in checks:
            try:
                record_check(check(arg))
            except CeilingError as exc:
                record["skipped"].append({"battery": battery, "reason": str(exc), "ceiling": exc.ceiling,
                                          "found": exc.found})
                break
            except FslabError as exc:
                name = getattr(check, "__name__", battery)
                record["checks"][name] = "fail"
                failures.append({"label": label, "check": name, "descriptor": descriptor,
                                 "details": {"error": f"{type(exc).__name__}: {exc}"}, "legend": legend(M)})
    return {"record": record, "failures": failures}


def run_suite(corpus: list[dict], jobs: int = 1, config: CorpusConfig | None = None) -> SuiteResult:
    config = config or CorpusConfig()
    labels = [d["label"] for d in corpus]
    if len(set(labels)) != len(labels):
        raise ValueError("instance labels must be unique")
    warnings = []
    if not corpus:
        warnings.append("empty corpus: nothing was checked")
        log.warning("empty corpus: nothing was checked")
    if jobs > 1 and len(corpus) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, corpus, chunksize=4))
    else:
        results = [run_instance(d) for d in corpus]
    results.sort(key=lambda r: r["record"]["label"])
    summary: dict[str, dict] = {}
    failures, skipped, instances = [], [], []
    for r in results:
        rec = r["record"]
        instances.append(rec)
        failures.extend(r["failures"])
        for s in rec["skipped"]:
            skipped.append({"label": rec["label"], **s})
        for name, outcome in rec["checks"].items():
            row = summary.setdefault(name, {"passed": 0, "vacuous": 0, "failed": 0})
            if outcome == "fail":
                row["failed"] += 1
            else:
                row["passed"] += 1
                if outcome == "vacuous":
                    row["vacuous"] += 1
    summary = {k: summary[k] for k in sorted(summary)}
    return SuiteResult(summary, failures, skipped, instances, fingerprint(corpus, config), warnings)
