"""Instance checks of the identities satisfied by rational (symbolic) powers.

Each check recomputes both sides of an identity along different code paths
(Newton polyhedron scans, symbolic polyhedron scans, LP valuations,
saturation, decomposition) and returns a :class:`CheckReport`. A failing
report always names a witness monomial or prime.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .decomposition import associated_primes, big_height, minimal_primes, primary_components_min
from .monomial import (
    MonomialIdeal,
    MonomialPrime,
    Ring,
    contract_to_prime,
    disjoint_block_sum,
    format_monomial,
    ideal_sum,
    ideal_to_dict,
    intersect_all,
    power,
    product,
)
from .parsing import format_rational
from .polyhedra import stability_denominator
from .powers import (
    SYMBOLIC_METHODS,
    Method,
    differential_power_monomial,
    global_saturation_ideal,
    ideal_from_predicate,
    integral_closure,
    iota,
    member_by_valuation,
    ordinary_symbolic_power,
    phi_splitting,
    rational_power,
    rational_symbolic_power,
    root_characterization,
    saturated_power,
    scan_box,
    symbolic_via_saturation,
)

PASS = "pass"
FAIL = "fail"

JOBS_ENV = "RATSYM_JOBS"


@dataclass
class CheckReport:
    theorem_id: str
    instance: dict
    verdict: str
    witness: str | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict == FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def instance_hash(self) -> str:
        blob = json.dumps(self.instance, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        s = f"{self.verdict.upper()} {self.theorem_id} {json.dumps(self.instance, sort_keys=True)}"
        if self.witness:
            s += f" witness={self.witness}"
        return s


def _report(theorem_id, instance, witness, **details) -> CheckReport:
    return CheckReport(theorem_id, instance, FAIL if witness else PASS, witness, details)


def _mono(ring: Ring, a) -> str:
    return format_monomial(ring, a)


def _first_not_in(I: MonomialIdeal, J: MonomialIdeal):
    """A generator of I outside J, or None."""
    return next((g for g in I.gens if not J.contains(g)), None)


def _difference_witness(I: MonomialIdeal, J: MonomialIdeal) -> str | None:
    g = _first_not_in(I, J)
    if g is not None:
        return _mono(I.ring, g)
    g = _first_not_in(J, I)
    if g is not None:
        return _mono(I.ring, g)
    return None


def _inst(**kw) -> dict:
    out = {}
    for k, v in kw.items():
        if isinstance(v, MonomialIdeal):
            out[k] = ideal_to_dict(v)
        elif isinstance(v, Fraction):
            out[k] = format_rational(v)
        else:
            out[k] = v
    return out


# identities ----------------------------------------------------------------

def check_containment(I: MonomialIdeal, u) -> CheckReport:
    """Ī^{(h u)} is contained in Ī^u where h is the big height."""
    u = Fraction(u)
    h = big_height(I)
    method = Method.SP_SCALING if I.is_squarefree() else Method.LOCALIZATION_CONTRACTION
    lhs = rational_symbolic_power(I, h * u, method).ideal
    rhs = rational_power(I, u).ideal
    bad = _first_not_in(lhs, rhs)
    return _report("containment", _inst(I=I, u=u), bad and _mono(I.ring, bad), big_height=h)


def check_symbolic_primary_decomposition(I: MonomialIdeal, u) -> CheckReport:
    """Ī^{(u)} is the intersection of the rational symbolic powers of the primary
    components of I, and its associated primes are the minimal primes of I."""
    u = Fraction(u)
    inst = _inst(I=I, u=u)
    decomp = primary_components_min(I)
    lhs = rational_symbolic_power(I, u, Method.LOCALIZATION_CONTRACTION).ideal
    parts = []
    for p, Q in decomp.components:
        Qu = symbolic_via_saturation(Q, u)
        ass = associated_primes(Qu)
        if ass != [p]:
            return _report("symbolic-primary-decomposition", inst, f"component for {p} has primes {ass}")
        parts.append(Qu)
    rhs = intersect_all(parts, I.ring)
    w = _difference_witness(lhs, rhs)
    if w:
        return _report("symbolic-primary-decomposition", inst, w)
    ass, mins = associated_primes(lhs), minimal_primes(I)
    if ass != mins:
        extra = sorted(set(map(str, ass)) ^ set(map(str, mins)))
        return _report("symbolic-primary-decomposition", inst, f"prime {extra[0]}")
    return _report("symbolic-primary-decomposition", inst, None, components=len(parts))


def _grid(I: MonomialIdeal, J: MonomialIdeal, u: Fraction) -> tuple[int, int]:
    e = math.lcm(stability_denominator(I), stability_denominator(J), u.denominator)
    return e, int(u * e)


def _binomial_sum(ring, ea, eb, I, J, e, s, power_of) -> MonomialIdeal:
    """sum_{i=0}^{s} power_of(I, i/e) * power_of(J, (s-i)/e) embedded in ``ring``."""

    def at(K, k):
        if k == 0:
            return MonomialIdeal.unit(K.ring)
        return power_of(K, Fraction(k, e))

    total = MonomialIdeal.zero(ring)
    for i in range(s + 1):
        left = ea.ideal(at(I, i), ring)
        right = eb.ideal(at(J, s - i), ring)
        total = ideal_sum(total, product(left, right))
    return total


def check_binomial_rational(I: MonomialIdeal, J: MonomialIdeal, u) -> CheckReport:
    u = Fraction(u)
    S, ea, eb = disjoint_block_sum(I, J)
    e, s = _grid(I, J, u)
    lhs = rational_power(S, u).ideal
    rhs = _binomial_sum(S.ring, ea, eb, I, J, e, s, lambda K, w: rational_power(K, w).ideal)
    return _report("binomial-rational", _inst(I=I, J=J, u=u), _difference_witness(lhs, rhs), e=e)


def check_binomial_symbolic(I: MonomialIdeal, J: MonomialIdeal, u) -> CheckReport:
    """Binomial expansion for rational symbolic powers, plus the saturated
    form with K, L the saturation ideals of I and J.

    The saturated expansion holds for any K, L; the identification of the
    saturated power of I + J with its symbolic power needs the exact K, L,
    which are approximated, so a mismatch there is only a warning.
    """
    u = Fraction(u)
    inst = _inst(I=I, J=J, u=u)
    S, ea, eb = disjoint_block_sum(I, J)
    ring = S.ring
    e, s = _grid(I, J, u)
    method = Method.SP_SCALING if S.is_squarefree() else Method.LOCALIZATION_CONTRACTION
    lhs = rational_symbolic_power(S, u, method).ideal
    rhs = _binomial_sum(
        ring, ea, eb, I, J, e, s, lambda K, w: rational_symbolic_power(K, w, Method.LOCALIZATION_CONTRACTION).ideal
    )
    w = _difference_witness(lhs, rhs)
    if w:
        return _report("binomial-symbolic", inst, w)

    K = global_saturation_ideal(I) or MonomialIdeal.unit(I.ring)
    L = global_saturation_ideal(J) or MonomialIdeal.unit(J.ring)
    KL = product(ea.ideal(K, ring), eb.ideal(L, ring))
    sat_lhs = saturated_power(S, u, KL)
    sat_rhs = _binomial_sum(
        ring, ea, eb, I, J, e, s, lambda M, w: saturated_power(M, w, K if M.ring == I.ring else L)
    )
    w = _difference_witness(sat_lhs, sat_rhs)
    if w:
        return _report("binomial-symbolic", inst, f"saturated form: {w}")
    warnings = []
    if sat_lhs != lhs:
        warnings.append("saturation by KL differs from the symbolic power (Ass* approximation)")
    return _report("binomial-symbolic", inst, None, e=e, warnings=warnings)


def check_ass_star_stabilization(I: MonomialIdeal, k_max: int | None = None) -> CheckReport:
    """Associated primes of Ī^{k/e}, k = 1..k_max, stop growing before k_max."""
    e = stability_denominator(I)
    k_max = k_max or 3 * e
    union: set = set()
    last_new = 0
    newest = None
    for k in range(1, k_max + 1):
        ass = set(associated_primes(rational_power(I, Fraction(k, e)).ideal))
        fresh = ass - union
        if fresh:
            last_new = k
            newest = min(fresh, key=lambda p: p.sort_key())
            union |= fresh
    primes = [str(p) for p in sorted(union, key=MonomialPrime.sort_key)]
    witness = f"new prime {newest} at k={k_max}" if last_new >= k_max else None
    return _report(
        "ass-star-stabilization", _inst(I=I, k_max=k_max), witness, e=e, stabilized_at=last_new, primes=primes
    )


def default_splitting_samples(k_max: int = 3, ms: Sequence[int] = (2, 3, 5)) -> list[tuple[int, int, int]]:
    return [(k, m, j) for k in range(k_max + 1) for m in ms for j in range(1, m + 1)]


def check_splitting_stability(I: MonomialIdeal, samples=None) -> CheckReport:
    """Split-injection conditions for the filtration Ī^{(k/e)}:

    (a) iota maps Ī^{((k+1)/e)} into (Ī^{((km+j)/e)})^{1/m};
    (b) the splitting maps (Ī^{((km+j)/e)})^{1/m} onto Ī^{((k+1)/e)}.
    """
    if not I.is_squarefree():
        raise ValueError("splitting checks are for squarefree ideals")
    samples = default_splitting_samples() if samples is None else samples
    e = stability_denominator(I)
    inst = _inst(I=I, samples=[list(t) for t in samples])
    for k, m, j in samples:
        if not 1 <= j <= m:
            raise ValueError(f"sample {(k, m, j)} needs 1 <= j <= m")
        target = rational_symbolic_power(I, Fraction(k + 1, e), Method.LOCALIZATION_CONTRACTION).ideal
        big_u = Fraction(k * m + j, e)

        def in_big(a):
            return member_by_valuation(I, big_u, a)

        for b in target.gens:
            if not in_big(iota(m, b)):
                return _report("splitting-stability", inst, f"(a) k={k} m={m} j={j}: {_mono(I.ring, b)}", e=e)
        # minimal generators of the big power lie in [0, ceil(big_u)]^n, so the
        # preimage {b : m b in it} is generated inside [0, ceil(ceil(big_u)/m)]^n
        bound = -(-(-(-big_u.numerator // big_u.denominator)) // m) + 1
        box = [bound] * I.ring.n

        def in_image(b):
            a = iota(m, b)
            return in_big(a) and phi_splitting(m, a) == tuple(b)

        image = ideal_from_predicate(I.ring, box, in_image)
        w = _difference_witness(image, target)
        if w:
            return _report("splitting-stability", inst, f"(b) k={k} m={m} j={j}: {w}", e=e)
    return _report("splitting-stability", inst, None, e=e, samples=len(samples))


# consistency checks behind the acceptance criteria ------------------------

def check_method_agreement(I: MonomialIdeal, u) -> CheckReport:
    u = Fraction(u)
    results = {m.value: rational_symbolic_power(I, u, m).ideal for m in SYMBOLIC_METHODS}
    base = results[Method.LOCALIZATION_CONTRACTION.value]
    for name, ideal in results.items():
        w = _difference_witness(base, ideal)
        if w:
            return _report("method-agreement", _inst(I=I, u=u), f"{name}: {w}")
    return _report("method-agreement", _inst(I=I, u=u), None)


def check_saturation_identity(I: MonomialIdeal, u) -> CheckReport:
    u = Fraction(u)
    lhs = symbolic_via_saturation(I, u)
    rhs = rational_symbolic_power(I, u, Method.LOCALIZATION_CONTRACTION).ideal
    return _report("saturation-identity", _inst(I=I, u=u), _difference_witness(lhs, rhs))


def check_root_characterization(I: MonomialIdeal, u) -> CheckReport:
    """Pointwise over the scan box: x^a in Ī^{(u)} iff q a in I^{(p)}."""
    u = Fraction(u)
    p, q = u.numerator, u.denominator
    sym = rational_symbolic_power(I, u, Method.SP_SCALING).ideal
    Ip = ordinary_symbolic_power(I, p)
    for a in itertools.product(*(range(b + 1) for b in scan_box(I, u))):
        if sym.contains(a) != Ip.contains(tuple(q * x for x in a)):
            return _report("root-characterization", _inst(I=I, u=u), _mono(I.ring, a))
    return _report("root-characterization", _inst(I=I, u=u), None)


def check_zariski_nagata(I: MonomialIdeal, u) -> CheckReport:
    u = Fraction(u)
    diff = differential_power_monomial(I, u)
    sym = rational_symbolic_power(I, u, Method.SP_SCALING).ideal
    return _report("zariski-nagata", _inst(I=I, u=u), _difference_witness(diff, sym))


def ordinary_power_contraction(I: MonomialIdeal, p: int) -> MonomialIdeal:
    """I^{(p)} read as the intersection of I^p R_P ∩ R over P in Ass(I)."""
    Ip = power(I, p)
    return intersect_all((contract_to_prime(Ip, P) for P in associated_primes(I)), I.ring)


NONRADICAL_FORMS = ("contraction", "ordinary", "closure")


def check_nonradical_root(I: MonomialIdeal, u) -> CheckReport:
    """Search harness: does the root characterization survive for a non-radical I?

    Three readings of the right-hand side are compared against the
    localization-contraction value: x^q in the p-th rational symbolic power,
    x^q in the ordinary p-th symbolic power, and x^q in its integral closure.
    The witness names the first reading that disagrees. A failure is a
    candidate answer to an open question, not a bug.
    """
    u = Fraction(u)
    lhs = rational_symbolic_power(I, u, Method.LOCALIZATION_CONTRACTION).ideal
    p, q = u.numerator, u.denominator
    ordinary = ordinary_power_contraction(I, p)
    targets = {
        "contraction": rational_symbolic_power(I, p, Method.LOCALIZATION_CONTRACTION).ideal,
        "ordinary": ordinary,
        "closure": integral_closure(ordinary),
    }
    box = scan_box(I, u)
    agree = {}
    witness = None
    for form in NONRADICAL_FORMS:
        J = targets[form]
        rhs = ideal_from_predicate(I.ring, box, lambda a: J.contains(tuple(q * x for x in a)))
        w = _difference_witness(lhs, rhs)
        agree[form] = w is None
        if w and witness is None:
            witness = f"{form}: {w}"
    return _report("nonradical-root", _inst(I=I, u=u), witness, agree=agree)


# random corpora -----------------------------------------------------------

@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20250101
    count: int = 200
    n_min: int = 2
    n_max: int = 5
    gens_max: int = 6
    exp_max: int = 4


def _ring(n: int, prefix: str = "x") -> Ring:
    return Ring(tuple(f"{prefix}{i}" for i in range(1, n + 1)))


def random_squarefree_ideal(rng: random.Random, n_min=2, n_max=5, gens_max=6, prefix="x") -> MonomialIdeal:
    n = rng.randint(n_min, n_max)
    ring = _ring(n, prefix)
    k = rng.randint(1, gens_max)
    gens = []
    for _ in range(k):
        g = [rng.randint(0, 1) for _ in range(n)]
        if not any(g):
            g[rng.randrange(n)] = 1
        gens.append(tuple(g))
    return MonomialIdeal(ring, tuple(gens))


def random_monomial_ideal(rng: random.Random, n_min=2, n_max=5, gens_max=6, exp_max=4, prefix="x") -> MonomialIdeal:
    n = rng.randint(n_min, n_max)
    ring = _ring(n, prefix)
    k = rng.randint(1, gens_max)
    gens = []
    for _ in range(k):
        g = [rng.randint(0, exp_max) for _ in range(n)]
        if not any(g):
            g[rng.randrange(n)] = rng.randint(1, exp_max)
        gens.append(tuple(g))
    return MonomialIdeal(ring, tuple(gens))


def squarefree_corpus(cfg: CorpusConfig = CorpusConfig()) -> list[MonomialIdeal]:
    rng = random.Random(cfg.seed)
    return [random_squarefree_ideal(rng, cfg.n_min, cfg.n_max, cfg.gens_max) for _ in range(cfg.count)]


def monomial_corpus(cfg: CorpusConfig = CorpusConfig(count=100)) -> list[MonomialIdeal]:
    rng = random.Random(cfg.seed + 1)
    return [random_monomial_ideal(rng, cfg.n_min, cfg.n_max, cfg.gens_max, cfg.exp_max) for _ in range(cfg.count)]


def block_pair_corpus(count: int = 50, seed: int = 20250102, block_max: int = 3):
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        I = random_squarefree_ideal(rng, 1, block_max, 3, prefix="x")
        J = random_squarefree_ideal(rng, 1, block_max, 3, prefix="y")
        pairs.append((I, J))
    return pairs


# suite ----------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteConfig:
    count: int = 200
    nonsquarefree_count: int = 100
    pair_count: int = 50
    seed: int = 20250101
    jobs: int | None = None


def _tasks(cfg: SuiteConfig) -> list[tuple[Callable, tuple]]:
    sq = squarefree_corpus(CorpusConfig(seed=cfg.seed, count=cfg.count))
    ns = monomial_corpus(CorpusConfig(seed=cfg.seed, count=cfg.nonsquarefree_count))
    pairs = block_pair_corpus(cfg.pair_count, cfg.seed + 2)
    us = [Fraction(1, 2), Fraction(1), Fraction(4, 3), Fraction(2), Fraction(5, 2), Fraction(3)]
    tasks: list = []
    for I in sq:
        for u in us:
            tasks.append((check_method_agreement, (I, u)))
            tasks.append((check_saturation_identity, (I, u)))
        for u in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
            tasks.append((check_containment, (I, u)))
        tasks.append((check_symbolic_primary_decomposition, (I, Fraction(5, 2))))
        tasks.append((check_ass_star_stabilization, (I,)))
    for I in ns:
        for u in us:
            tasks.append((check_saturation_identity, (I, u)))
    for I in sq[: cfg.pair_count]:
        tasks.append((check_splitting_stability, (I,)))
    for idx, (I, J) in enumerate(pairs):
        u = [Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(4, 3), Fraction(3, 2), Fraction(2)][idx % 6]
        tasks.append((check_binomial_rational, (I, J, u)))
        tasks.append((check_binomial_symbolic, (I, J, u)))
    return tasks


def _run_task(task) -> CheckReport:
    fn, args = task
    return fn(*args)


def jobs_from_env(default: int = 1) -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, default)))
    except ValueError:
        return default


def sort_reports(reports: list[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (r.theorem_id, r.instance_hash()))


def run_suite(cfg: SuiteConfig = SuiteConfig()) -> list[CheckReport]:
    tasks = _tasks(cfg)
    jobs = cfg.jobs or jobs_from_env()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        reports = [_run_task(t) for t in tasks]
    return sort_reports(reports)
