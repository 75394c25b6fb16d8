"""Deterministic instance generation and the invariance verification harness.

Every suite replays a fixed theorem-shaped check over a stream of random
ideals that is fully determined by (seed, trial): each trial derives its
own generator through a SHA-256 mix, so trials are order-independent and
individually reproducible.  A violation is serialized as a complete
reproduction case; suites whose subject is an open inequality report
exceptions as findings rather than failures.
"""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import asdict, dataclass, field

from .bier import bier_murai_ideal, bm_complex, bm_inflation_identity, sphere_certificate
from .core import (
    CapExceededError,
    MonomialIdeal,
    Vec,
    lcm_join,
    make_ring,
    minimalize,
    ones_vec,
    unit_vec,
    vadd,
    vjoin,
)
from .duality import alexander_dual, dual_slide_correspondence
from .functors import (
    apply_script,
    compress,
    inflate,
    is_generalized_polarization,
    point_map,
    polarize,
    satisfies_consecutive_condition,
    slide_ideal,
    slot_reversal,
)
from .homalg import (
    as_ideal_module,
    as_quotient_module,
    associated_primes,
    depth_dim,
    is_sequentially_cm,
    multigraded_betti,
    standard_pairs,
    taylor_betti,
)
from .ideal_io import ideal_to_document, parse_ideal
from .stanley import pull_decomposition, push_decomposition, sdepth_exact, validate_decomposition

_NAME_POOL = ("x", "y", "z", "w", "u", "v", "s", "t")


@dataclass(frozen=True)
class HarnessConfig:
    """Knobs of a verification run; the seed fully determines the stream."""

    suite: str = "golden"
    trials: int = 100
    seed: int = 1
    n: int = 3
    max_exp: int = 2
    max_gens: int = 4
    box_cap: int = 10**6
    poset_cap: int = 4096
    vertex_cap: int = 24
    lattice_cap: int = 1 << 16
    char: int = 0
    max_skip_ratio: float = 0.5

    def __post_init__(self) -> None:
        if self.trials < 0 or self.n < 1 or self.max_exp < 0 or self.max_gens < 1:
            raise ValueError("config values must be positive")


@dataclass
class SuiteReport:
    suite: str
    config: HarnessConfig
    trials: int = 0
    completed: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        from . import __version__

        return {
            "suite": self.suite,
            "version": __version__,
            "config": asdict(self.config),
            "trials": self.trials,
            "completed": self.completed,
            "skipped": self.skipped,
            "violations": self.violations,
            "findings": self.findings,
            "elapsed_s": round(self.elapsed_s, 3),
            "ok": self.ok,
        }


def child_rng(seed: int, trial: int) -> random.Random:
    """Per-trial generator from a cryptographic mix of (seed, trial)."""
    digest = hashlib.sha256(f"{seed}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _ring_names(n: int) -> tuple[str, ...]:
    if n <= len(_NAME_POOL):
        return _NAME_POOL[:n]
    return tuple(f"x{k}" for k in range(1, n + 1))


def random_ideal(cfg: HarnessConfig, trial: int, rng: random.Random | None = None,
                 max_exp: int | None = None, max_gens: int | None = None,
                 n: int | None = None) -> tuple[MonomialIdeal, Vec]:
    """Deterministic nonzero proper ideal plus its admissible vector.

    Draws a generator count, uniform exponents, minimalizes, and redraws
    whenever the unit ideal would appear.  The admissible vector is the
    lcm join bumped up to at least one in every coordinate.
    """
    rng = rng or child_rng(cfg.seed, trial)
    n = n if n is not None else cfg.n
    max_exp = max_exp if max_exp is not None else cfg.max_exp
    max_gens = max_gens if max_gens is not None else cfg.max_gens
    ring = make_ring(_ring_names(n))
    while True:
        count = rng.randint(1, max_gens)
        vecs = [tuple(rng.randint(0, max_exp) for _ in range(n)) for _ in range(count)]
        if any(not any(v) for v in vecs):
            continue
        ideal = minimalize(ring, vecs)
        return ideal, vjoin(lcm_join(ideal), ones_vec(n))


def _case(trial: int, ideal: MonomialIdeal, a: Vec | None = None, **params) -> dict:
    doc = ideal_to_document(ideal, a)
    return {"trial": trial, "document": doc, "params": params}


def _run_trials(cfg: HarnessConfig, body) -> SuiteReport:
    report = SuiteReport(cfg.suite, cfg, trials=cfg.trials)
    start = time.perf_counter()
    for trial in range(cfg.trials):
        try:
            body(trial, report)
            report.completed += 1
        except CapExceededError as exc:
            report.skipped += 1
            report.findings.append({"trial": trial, "skipped": str(exc)})
    report.elapsed_s = time.perf_counter() - start
    if cfg.trials and report.skipped > cfg.max_skip_ratio * cfg.trials:
        raise CapExceededError(
            f"{report.skipped}/{cfg.trials} trials skipped, above the allowed ratio"
        )
    return report


# ---------------------------------------------------------------------------
# golden fixtures (the worked four-variable example)


def _expect(report: SuiteReport, ok: bool, detail: str, case: dict) -> None:
    if not ok:
        report.violations.append({**case, "detail": detail})


def _suite_golden(cfg: HarnessConfig) -> SuiteReport:
    report = SuiteReport(cfg.suite, cfg, trials=1, completed=1)
    start = time.perf_counter()
    ring = make_ring(("x", "y", "z", "w"))
    I = parse_ideal("x*y*z, x*w, y*w", ring)
    one = ones_vec(4)
    case = _case(0, I, one)

    dual_expected = parse_ideal("x*y, x*w, y*w, z*w", ring)
    dual = alexander_dual(I, one, cfg.box_cap)
    _expect(report, dual == dual_expected, "dual w.r.t. (1,1,1,1) mismatch", case)

    slid_expected = parse_ideal("x^2*y*z, x^2*w, y*w", ring)
    slid = slide_ideal(I, 1, 1)
    _expect(report, slid == slid_expected, "slide at (1,1) mismatch", case)

    dual_slid = alexander_dual(slid, (2, 1, 1, 1), cfg.box_cap)
    _expect(report, dual_slid == dual_expected, "slid dual w.r.t. (2,1,1,1) mismatch", case)

    bm = bier_murai_ideal(I, one, cfg.box_cap)
    bm_ring = bm.ring
    bm_expected = parse_ideal(
        "x[1]*y[1]*z[1], x[1]*w[1], y[1]*w[1], x[2]*y[2], x[2]*w[2], y[2]*w[2], "
        "z[2]*w[2], x[1]*x[2], y[1]*y[2], z[1]*z[2], w[1]*w[2]",
        bm_ring,
    )
    _expect(report, bm == bm_expected, "sphere ideal generator list mismatch", case)

    rep1 = bm_inflation_identity(I, one, 1, 1, cfg.box_cap)
    _expect(report, rep1.ok, "inflation identity at slot 1 failed", case)
    lhs1_expected = parse_ideal(
        "x[1]*x[2]*y[1]*z[1], x[1]*x[2]*w[1], y[1]*w[1], x[3]*y[2], x[3]*w[2], "
        "y[2]*w[2], z[2]*w[2], x[1]*x[2]*x[3], y[1]*y[2], z[1]*z[2], w[1]*w[2]",
        rep1.slid_side.ring,
    )
    _expect(report, rep1.slid_side == lhs1_expected, "slid sphere ideal list mismatch", case)

    dual_bump = alexander_dual(I, (2, 1, 1, 1), cfg.box_cap)
    dual_bump_expected = parse_ideal("x^2*y, x^2*w, y*w, z*w", ring)
    _expect(report, dual_bump == dual_bump_expected, "dual w.r.t. (2,1,1,1) mismatch", case)

    rep2 = bm_inflation_identity(I, one, 1, 2, cfg.box_cap)
    _expect(report, rep2.ok, "inflation identity at slot 2 failed", case)
    lhs2_expected = parse_ideal(
        "x[1]*y[1]*z[1], x[1]*w[1], y[1]*w[1], x[2]*x[3]*y[2], x[2]*x[3]*w[2], "
        "y[2]*w[2], z[2]*w[2], x[1]*x[2]*x[3], y[1]*y[2], z[1]*z[2], w[1]*w[2]",
        rep2.slid_side.ring,
    )
    _expect(report, rep2.slid_side == lhs2_expected, "slot-2 slid sphere list mismatch", case)

    reversed_bm = slot_reversal(bm)
    bm_of_dual = bier_murai_ideal(dual, one, cfg.box_cap)
    _expect(report, reversed_bm == bm_of_dual, "slot reversal does not give the dual's sphere ideal", case)

    cert = sphere_certificate(bm_complex(I, one, cfg.box_cap, cfg.vertex_cap), 2)
    _expect(report, cert.verdict, "sphere certificate failed at dimension 2", case)

    report.elapsed_s = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# slide suites


def _suite_slide_homology(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, 4)
        slid = slide_ideal(ideal, i, j)
        case = _case(trial, ideal, a, i=i, j=j)

        def tau(b, i=i, j=j):
            return point_map("tau", b, i, j)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            bt = multigraded_betti(mk(ideal), cfg.char, cfg.lattice_cap)
            bt_slid = multigraded_betti(mk(slid), cfg.char, cfg.lattice_cap)
            if bt.reindexed(tau).entries != bt_slid.entries:
                _expect(report, False, f"betti table not tau-reindexed ({shape} shape)", case)
        dd = depth_dim(as_quotient_module(ideal), cfg.char, cfg.lattice_cap)
        dd_slid = depth_dim(as_quotient_module(slid), cfg.char, cfg.lattice_cap)
        _expect(report, dd.depth == dd_slid.depth, "depth changed under slide", case)
        _expect(report, dd.dim == dd_slid.dim, "dimension changed under slide", case)
        ass = associated_primes(ideal, cfg.box_cap)
        ass_slid = associated_primes(slid, cfg.box_cap)
        _expect(report, ass == ass_slid, "associated primes changed under slide", case)

    return _run_trials(cfg, body)


def _suite_betti_oracle(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng, max_gens=min(cfg.max_gens, 6))
        case = _case(trial, ideal, a)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            engine = multigraded_betti(mk(ideal), cfg.char, cfg.lattice_cap)
            oracle = taylor_betti(mk(ideal), cfg.char, cfg.lattice_cap)
            if engine.entries != oracle.entries:
                _expect(report, False, f"upper-Koszul table differs from Taylor oracle ({shape})", case)

    return _run_trials(cfg, body)


def _cm_gor(ideal: MonomialIdeal, cfg: HarnessConfig) -> tuple[bool, bool]:
    bt = multigraded_betti(as_quotient_module(ideal), cfg.char, cfg.lattice_cap)
    pd = bt.projdim()
    dd = depth_dim(as_quotient_module(ideal), cfg.char, cfg.lattice_cap)
    cm = dd.depth == dd.dim
    return cm, cm and bt.rank_at(pd) == 1


def _suite_slide_cm(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, 4)
        slid = slide_ideal(ideal, i, j)
        case = _case(trial, ideal, a, i=i, j=j)
        _expect(report, _cm_gor(ideal, cfg) == _cm_gor(slid, cfg),
                "CM/Gorenstein flags changed under slide", case)

    return _run_trials(cfg, body)


def _suite_slide_seqcm(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, cfg.max_exp + 1)
        slid = slide_ideal(ideal, i, j)
        case = _case(trial, ideal, a, i=i, j=j)
        _expect(
            report,
            is_sequentially_cm(ideal, cfg.char, cfg.vertex_cap)
            == is_sequentially_cm(slid, cfg.char, cfg.vertex_cap),
            "sequentially CM flag changed under slide",
            case,
        )

    return _run_trials(cfg, body)


def _bounded_random_ideal(cfg: HarnessConfig, trial: int, rng: random.Random,
                          poset_bound: int) -> tuple[MonomialIdeal, Vec]:
    """Redraw until the characteristic box is within the bound."""
    while True:
        ideal, a = random_ideal(cfg, trial, rng=rng)
        g = lcm_join(ideal)
        size = 1
        for e in g:
            size *= e + 1
        if size <= poset_bound:
            return ideal, a


def _suite_slide_sdepth(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _bounded_random_ideal(cfg, trial, rng, 256)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, cfg.max_exp + 1)
        slid = slide_ideal(ideal, i, j)
        case = _case(trial, ideal, a, i=i, j=j)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            module = mk(ideal)
            slid_module = mk(slid)
            sd, witness = sdepth_exact(module, poset_cap=cfg.poset_cap)
            sd_slid, witness_slid = sdepth_exact(slid_module, poset_cap=cfg.poset_cap)
            _expect(report, sd == sd_slid, f"stanley depth changed under slide ({shape})", case)
            pushed = push_decomposition(witness, i, j)
            ok, bad = validate_decomposition(pushed)
            _expect(report, ok, f"pushed decomposition invalid at {bad} ({shape})", case)
            _expect(report, pushed.sdepth() == witness.sdepth(),
                    f"push changed decomposition depth ({shape})", case)
            pulled = pull_decomposition(witness_slid, i, j)
            ok, bad = validate_decomposition(pulled)
            _expect(report, ok, f"pulled decomposition invalid at {bad} ({shape})", case)
            _expect(report, pulled.sdepth() == witness_slid.sdepth(),
                    f"pull changed decomposition depth ({shape})", case)
            depth = depth_dim(module, cfg.char, cfg.lattice_cap).depth
            if sd < depth:
                report.findings.append(
                    {**case, "finding": f"sdepth {sd} < depth {depth} ({shape} shape)"}
                )

    return _run_trials(cfg, body)


def _suite_compress_roundtrip(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng, max_exp=max(cfg.max_exp, 3))
        case = _case(trial, ideal, a)
        core_ideal, script = compress(ideal)
        _expect(report, satisfies_consecutive_condition(core_ideal),
                "compressed ideal misses the consecutive-exponent condition", case)
        _expect(report, apply_script(core_ideal, script) == ideal,
                "slide script does not rebuild the ideal", case)

    return _run_trials(cfg, body)


# ---------------------------------------------------------------------------
# polarization suites


def _random_determined(cfg: HarnessConfig, trial: int, rng: random.Random,
                       slot_budget: int = 9) -> tuple[MonomialIdeal, Vec]:
    """Random ideal with an admissible a, occasionally above the lcm join."""
    ideal, a = random_ideal(cfg, trial, rng=rng)
    n = ideal.ring.n
    budget = slot_budget - sum(a)
    bumped = list(a)
    for k in range(n):
        if budget > 0 and rng.random() < 0.3:
            bumped[k] += 1
            budget -= 1
    return ideal, tuple(bumped)


def _suite_polarize_homology(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _random_determined(cfg, trial, rng)
        pol = polarize(ideal, a)
        case = _case(trial, ideal, a)
        shift = sum(a) - ideal.ring.n

        def bottom_fill(b, a=a):
            return tuple(
                1 if j <= b[i] else 0 for i in range(len(a)) for j in range(1, a[i] + 1)
            )

        bt_i = multigraded_betti(as_ideal_module(ideal), cfg.char, cfg.lattice_cap)
        bt_pol_i = multigraded_betti(as_ideal_module(pol), cfg.char, cfg.lattice_cap)
        _expect(report, bt_i.reindexed(bottom_fill).entries == bt_pol_i.entries,
                "multigraded betti not carried by bottom filling", case)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            bt = multigraded_betti(mk(ideal), cfg.char, cfg.lattice_cap)
            bt_pol = multigraded_betti(mk(pol), cfg.char, cfg.lattice_cap)
            if bt.by_total_degree() != bt_pol.by_total_degree():
                _expect(report, False, f"coarse betti changed under polarization ({shape})", case)
        dd = depth_dim(as_quotient_module(ideal), cfg.char, cfg.lattice_cap)
        dd_pol = depth_dim(as_quotient_module(pol), cfg.char, cfg.lattice_cap)
        _expect(report, dd_pol.depth == dd.depth + shift, "depth shift wrong under polarization", case)
        _expect(report, dd_pol.dim == dd.dim + shift, "dim shift wrong under polarization", case)
        sp = standard_pairs(ideal, cfg.box_cap)
        sp_pol = standard_pairs(pol, cfg.box_cap)
        _expect(report, sp.deg == sp_pol.deg, "degree changed under polarization", case)

    return _run_trials(cfg, body)


def _suite_polarize_seqcm(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _random_determined(cfg, trial, rng)
        pol = polarize(ideal, a)
        case = _case(trial, ideal, a)
        _expect(
            report,
            is_sequentially_cm(ideal, cfg.char, cfg.vertex_cap)
            == is_sequentially_cm(pol, cfg.char, cfg.vertex_cap),
            "sequentially CM flag changed under polarization",
            case,
        )

    return _run_trials(cfg, body)


def _suite_polarize_adeg(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _random_determined(cfg, trial, rng)
        pol = polarize(ideal, a)
        case = _case(trial, ideal, a)
        _expect(
            report,
            standard_pairs(ideal, cfg.box_cap).adeg == standard_pairs(pol, cfg.box_cap).adeg,
            "arithmetic degree changed under polarization",
            case,
        )

    return _run_trials(cfg, body)


def _suite_generalized_polarization(cfg: HarnessConfig) -> SuiteReport:
    report = SuiteReport(cfg.suite, cfg, trials=1, completed=1)
    start = time.perf_counter()
    ring = make_ring(("x", "y", "z"))
    ideal = parse_ideal("x^2*y, x^2*z, x*y*z, x*z^2, y^3, y^2*z, y*z^2", ring)
    a = (2, 3, 3)
    from .core import grid_ring

    gring = grid_ring(("x", "y", "z"), a)
    alt = parse_ideal(
        "x[1]*x[2]*y[3], x[1]*x[2]*z[3], x[1]*y[2]*z[3], x[1]*z[2]*z[3], "
        "y[1]*y[2]*y[3], y[1]*y[2]*z[3], y[1]*z[2]*z[3]",
        gring,
    )
    case = _case(0, ideal, a)
    _expect(report, is_generalized_polarization(ideal, alt, a, cfg.char),
            "alternative polarization rejected", case)
    std = polarize(ideal, a)
    _expect(report, is_generalized_polarization(ideal, std, a, cfg.char),
            "standard polarization rejected", case)
    _expect(report, set(std.gens) != set(alt.gens),
            "alternative polarization coincides with the standard one", case)
    report.elapsed_s = time.perf_counter() - start
    return report


def _suite_inflate_invariants(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = random_ideal(cfg, trial, rng=rng, max_exp=1)
        i = rng.randint(1, ideal.ring.n)
        inflated = inflate(ideal, i)
        case = _case(trial, ideal, a, i=i)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            bt = multigraded_betti(mk(ideal), cfg.char, cfg.lattice_cap)
            bt_inf = multigraded_betti(mk(inflated), cfg.char, cfg.lattice_cap)
            if bt.by_index() != bt_inf.by_index():
                _expect(report, False, f"total betti numbers changed under inflation ({shape})", case)
        dd = depth_dim(as_quotient_module(ideal), cfg.char, cfg.lattice_cap)
        dd_inf = depth_dim(as_quotient_module(inflated), cfg.char, cfg.lattice_cap)
        _expect(report, dd_inf.depth == dd.depth + 1, "depth did not rise by 1 under inflation", case)
        _expect(report, dd_inf.dim == dd.dim + 1, "dim did not rise by 1 under inflation", case)
        _expect(
            report,
            is_sequentially_cm(ideal, cfg.char, cfg.vertex_cap)
            == is_sequentially_cm(inflated, cfg.char, cfg.vertex_cap),
            "sequentially CM flag changed under inflation",
            case,
        )

    return _run_trials(cfg, body)


# ---------------------------------------------------------------------------
# duality and sphere suites


def _suite_dual_slide(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _random_determined(cfg, trial, rng)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, a[i - 1] + 1)
        case = _case(trial, ideal, a, i=i, j=j)
        rep = dual_slide_correspondence(ideal, a, i, j, cfg.box_cap)
        _expect(report, rep.success, "dual generator pairing failed", case)

    return _run_trials(cfg, body)


def _suite_bm_inflation(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _random_determined(cfg, trial, rng, slot_budget=8)
        i = rng.randint(1, ideal.ring.n)
        j = rng.randint(1, a[i - 1] + 1)
        case = _case(trial, ideal, a, i=i, j=j)
        rep = bm_inflation_identity(ideal, a, i, j, cfg.box_cap)
        _expect(report, rep.ok, "sphere ideal inflation identity failed", case)

    return _run_trials(cfg, body)


def _suite_bm_compress(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, _ = random_ideal(cfg, trial, rng=rng)
        n = ideal.ring.n
        core_ideal, script = compress(ideal)
        case = _case(trial, ideal, None, script=[(op.axis, op.threshold) for op in script])
        a = vjoin(lcm_join(core_ideal), ones_vec(n))
        sphere = bier_murai_ideal(core_ideal, a, cfg.box_cap)
        current = core_ideal
        for op in script:
            sphere = inflate(sphere, op.axis, op.threshold)
            current = slide_ideal(current, op.axis, op.threshold)
            a = vadd(a, unit_vec(n, op.axis))
        _expect(report, current == ideal, "script replay does not rebuild the ideal", case)
        direct = bier_murai_ideal(ideal, vjoin(lcm_join(ideal), ones_vec(n)), cfg.box_cap)
        _expect(report, sphere == direct,
                "inflation replay does not rebuild the sphere ideal", case)

    return _run_trials(cfg, body)


def _suite_bm_spheres(cfg: HarnessConfig) -> SuiteReport:
    def body(trial: int, report: SuiteReport) -> None:
        # among a handful of admissible draws keep the largest complex so
        # the 12-vertex end of the range is actually exercised
        rng = child_rng(cfg.seed, trial)
        best = None
        for _ in range(6):
            n = rng.randint(1, min(cfg.n, 4))
            max_exp = rng.choice((1, 2, 3))
            ideal, a = random_ideal(cfg, trial, rng=rng, n=n, max_exp=max_exp)
            size = sum(a) + n
            if size <= 12 and (best is None or size > best[0]):
                best = (size, ideal, a)
        if best is None:
            raise CapExceededError("no admissible sphere instance drawn")
        _, ideal, a = best
        case = _case(trial, ideal, a)
        cert = sphere_certificate(
            bm_complex(ideal, a, cfg.box_cap, cfg.vertex_cap), sum(a) - 2, cfg.vertex_cap
        )
        _expect(report, cert.verdict, f"sphere certificate failed: {cert}", case)

    return _run_trials(cfg, body)


def _suite_sdepth_vs_depth(cfg: HarnessConfig) -> SuiteReport:
    """Observational: record sdepth < depth as findings, never as failures."""

    def body(trial: int, report: SuiteReport) -> None:
        rng = child_rng(cfg.seed, trial)
        ideal, a = _bounded_random_ideal(cfg, trial, rng, 256)
        case = _case(trial, ideal, a)
        for shape, mk in (("ideal", as_ideal_module), ("quotient", as_quotient_module)):
            module = mk(ideal)
            sd, _ = sdepth_exact(module, poset_cap=cfg.poset_cap)
            depth = depth_dim(module, cfg.char, cfg.lattice_cap).depth
            if sd < depth:
                report.findings.append(
                    {**case, "finding": f"sdepth {sd} < depth {depth} ({shape} shape)"}
                )

    return _run_trials(cfg, body)


SUITES = {
    "golden": _suite_golden,
    "slide_homology": _suite_slide_homology,
    "betti_oracle": _suite_betti_oracle,
    "slide_cm": _suite_slide_cm,
    "slide_seqcm": _suite_slide_seqcm,
    "slide_sdepth": _suite_slide_sdepth,
    "compress_roundtrip": _suite_compress_roundtrip,
    "polarize_homology": _suite_polarize_homology,
    "polarize_seqcm": _suite_polarize_seqcm,
    "polarize_adeg": _suite_polarize_adeg,
    "generalized_polarization": _suite_generalized_polarization,
    "inflate_invariants": _suite_inflate_invariants,
    "dual_slide": _suite_dual_slide,
    "bm_inflation": _suite_bm_inflation,
    "bm_compress": _suite_bm_compress,
    "bm_spheres": _suite_bm_spheres,
    "sdepth_vs_depth": _suite_sdepth_vs_depth,
}


def verify_suite(cfg: HarnessConfig) -> SuiteReport:
    """Run one named suite; unknown names raise ValueError."""
    if cfg.suite not in SUITES:
        raise ValueError(f"unknown suite {cfg.suite!r}; known: {', '.join(sorted(SUITES))}")
    return SUITES[cfg.suite](cfg)
