"""Quadratic forms on a 2g-dimensional symplectic GF(2)-space.

Coordinates follow one fixed layout everywhere: a vector is (lam_1..lam_g,
mu_1..mu_g); a form [eps; eps'] has eps_i = q(e_i), eps'_i = q(f_i), so it
evaluates as eps.lam + eps'.mu + lam.mu, and the translate q+v has
characteristic (eps+mu, eps'+lam).  This is the unique assignment compatible
with arf(q+v) = arf(q) + q(v).  Labels are odd subsets of {1..2g+1} relative
to an Aronhold basis and combine by symmetric difference; all parity
bookkeeping can be done on labels alone via the length-mod-4 law.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b)) % 2


def _xor(a, b) -> tuple[int, ...]:
    return tuple((x + y) % 2 for x, y in zip(a, b))


@dataclass(frozen=True)
class F2Vector:
    genus: int
    coords: tuple[int, ...]  # (lam | mu), length 2g

    def __post_init__(self):
        if len(self.coords) != 2 * self.genus:
            raise ValueError("coordinate length must be 2*genus")
        if any(c not in (0, 1) for c in self.coords):
            raise ValueError("coordinates must be bits")

    @property
    def lam(self) -> tuple[int, ...]:
        return self.coords[: self.genus]

    @property
    def mu(self) -> tuple[int, ...]:
        return self.coords[self.genus:]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "F2Vector") -> "F2Vector":
        self._check(other)
        return F2Vector(self.genus, _xor(self.coords, other.coords))

    def pairing(self, other: "F2Vector") -> int:
        """Symplectic pairing <(lam,mu),(lam',mu')> = lam.mu' + lam'.mu."""
        self._check(other)
        return (_dot(self.lam, other.mu) + _dot(other.lam, self.mu)) % 2

    def _check(self, other):
        if self.genus != other.genus:
            raise ValueError("genus mismatch")

    def serialize(self) -> str:
        g = self.genus
        return "".join(map(str, self.lam)) + "|" + "".join(map(str, self.mu))


def all_vectors(genus: int):
    for bits in itertools.product((0, 1), repeat=2 * genus):
        yield F2Vector(genus, bits)


@dataclass(frozen=True)
class QuadraticForm:
    genus: int
    eps: tuple[int, ...]
    eps_prime: tuple[int, ...]

    def __post_init__(self):
        if len(self.eps) != self.genus or len(self.eps_prime) != self.genus:
            raise ValueError("characteristic halves must have length genus")

    def value(self, v: F2Vector) -> int:
        if v.genus != self.genus:
            raise ValueError("genus mismatch")
        return (_dot(self.eps, v.mu) + _dot(self.eps_prime, v.lam)
                + _dot(v.lam, v.mu)) % 2

    def serialize(self) -> str:
        return "".join(map(str, self.eps)) + "|" + "".join(map(str, self.eps_prime))

    @staticmethod
    def parse(genus: int, s: str) -> "QuadraticForm":
        a, b = s.split("|")
        return QuadraticForm(genus, tuple(int(c) for c in a), tuple(int(c) for c in b))


def q_zero(genus: int) -> QuadraticForm:
    return QuadraticForm(genus, (0,) * genus, (0,) * genus)


def all_forms(genus: int):
    for eps in itertools.product((0, 1), repeat=genus):
        for epsp in itertools.product((0, 1), repeat=genus):
            yield QuadraticForm(genus, eps, epsp)


def arf(q: QuadraticForm) -> int:
    """Arf invariant eps.eps'; equals sum q(e_i)q(f_i) in any symplectic basis."""
    return _dot(q.eps, q.eps_prime)


def act(q: QuadraticForm, v: F2Vector) -> QuadraticForm:
    """Translate of a form by a vector: [eps;eps'] + (lam,mu) = [eps+mu; eps'+lam]."""
    if q.genus != v.genus:
        raise ValueError("genus mismatch")
    return QuadraticForm(q.genus, _xor(q.eps, v.mu), _xor(q.eps_prime, v.lam))


def form_sum(*forms: QuadraticForm) -> QuadraticForm:
    """Sum of an odd number of forms (componentwise XOR of characteristics)."""
    if len(forms) % 2 == 0:
        raise ValueError("need an odd number of forms")
    g = forms[0].genus
    eps = (0,) * g
    epsp = (0,) * g
    for q in forms:
        if q.genus != g:
            raise ValueError("genus mismatch")
        eps = _xor(eps, q.eps)
        epsp = _xor(epsp, q.eps_prime)
    return QuadraticForm(g, eps, epsp)


def difference_vector(q1: QuadraticForm, q2: QuadraticForm) -> F2Vector:
    """The unique v with act(q1, v) == q2."""
    if q1.genus != q2.genus:
        raise ValueError("genus mismatch")
    return F2Vector(q1.genus, _xor(q1.eps_prime, q2.eps_prime) + _xor(q1.eps, q2.eps))


def is_syzygetic(q1: QuadraticForm, q2: QuadraticForm, q3: QuadraticForm) -> bool:
    """Whether arf(q1)+arf(q2)+arf(q3)+arf(q1+q2+q3) vanishes."""
    if len({(q.eps, q.eps_prime) for q in (q1, q2, q3)}) != 3:
        raise ValueError("forms must be pairwise distinct")
    if not q1.genus == q2.genus == q3.genus:
        raise ValueError("genus mismatch")
    total = arf(q1) ^ arf(q2) ^ arf(q3) ^ arf(form_sum(q1, q2, q3))
    return total == 0


# ---------------------------------------------------------------------------
# Aronhold bases and labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AronholdBasis:
    genus: int
    forms: tuple[QuadraticForm, ...]

    def __post_init__(self):
        if len(self.forms) != 2 * self.genus + 1:
            raise ValueError("an Aronhold basis has 2g+1 forms")


@dataclass(frozen=True)
class Label:
    """Odd-cardinality subset of {1..2g+1} naming a form in an Aronhold basis."""

    genus: int
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if len(idx) % 2 == 0:
            raise ValueError("label cardinality must be odd")
        if len(set(idx)) != len(idx):
            raise ValueError("label indices must be distinct")
        if any(i < 1 or i > 2 * self.genus + 1 for i in idx):
            raise ValueError("label index out of range")
        if tuple(sorted(idx)) != idx:
            raise ValueError("label indices must be sorted ascending")

    @staticmethod
    def of(genus: int, indices) -> "Label":
        return Label(genus, tuple(sorted(indices)))

    def __xor__(self, other) -> tuple[int, ...]:
        return symmetric_difference(self.indices, other.indices)


def symmetric_difference(*index_sets) -> tuple[int, ...]:
    s: set[int] = set()
    for idx in index_sets:
        s ^= set(idx)
    return tuple(sorted(s))


def basis_arf(genus: int) -> int:
    """Arf invariant of every form in an Aronhold basis: 0 iff g = 0,1 mod 4."""
    return 0 if genus % 4 in (0, 1) else 1


def label_arf(genus: int, indices) -> int:
    """Arf invariant of the form labeled by an odd subset, via the mod-4 law."""
    k = len(indices)
    if k % 2 == 0:
        raise ValueError("not a form label (even cardinality)")
    return (basis_arf(genus) + (k - 1) // 2) % 2


def is_fundamental_set(vectors: list[F2Vector]) -> bool:
    g = vectors[0].genus
    if len(vectors) != 2 * g + 1:
        return False
    total = F2Vector(g, (0,) * (2 * g))
    for v in vectors:
        total = total + v
    if not total.is_zero():
        return False
    return all(u.pairing(v) == 1
               for u, v in itertools.combinations(vectors, 2))


def aronhold_from_fundamental(fund: list[F2Vector], q: QuadraticForm,
                              mu: int = 0) -> AronholdBasis:
    """Aronhold basis from a fundamental set: w = sum of the v_i with
    q(v_i) = mu, then q_i = q + w + v_i.
    """
    g = q.genus
    if len(fund) != 2 * g + 1:
        raise ValueError("a fundamental set has 2g+1 vectors")
    total = F2Vector(g, (0,) * (2 * g))
    for v in fund:
        total = total + v
    if not total.is_zero():
        raise ValueError("not a fundamental set: vectors do not sum to zero")
    if any(u.pairing(v) != 1 for u, v in itertools.combinations(fund, 2)):
        raise ValueError("not a fundamental set: some pairing vanishes")
    w = F2Vector(g, (0,) * (2 * g))
    for v in fund:
        if q.value(v) == mu:
            w = w + v
    forms = tuple(act(q, w + v) for v in fund)
    a0 = arf(forms[0])
    if any(arf(f) != a0 for f in forms):
        raise AssertionError("construction produced unequal Arf invariants")
    return AronholdBasis(g, forms)


@lru_cache(maxsize=None)
def standard_fundamental_set(genus: int) -> tuple[F2Vector, ...]:
    """Lexicographically first fundamental set, by backtracking search."""
    g = genus
    universe = [F2Vector(g, bits)
                for bits in itertools.product((0, 1), repeat=2 * g)]
    universe = [v for v in universe if not v.is_zero()]
    need = 2 * g + 1

    def extend(chosen, start):
        if len(chosen) == need - 1:
            last = chosen[0]
            for v in chosen[1:]:
                last = last + v
            if last.is_zero():
                return None
            if any(last.pairing(u) != 1 for u in chosen):
                return None
            if last in chosen:
                return None
            return chosen + [last]
        for i in range(start, len(universe)):
            v = universe[i]
            if all(v.pairing(u) == 1 for u in chosen):
                result = extend(chosen + [v], i + 1)
                if result is not None:
                    return result
        return None

    result = extend([], 0)
    if result is None:
        raise RuntimeError("no fundamental set found (cannot happen)")
    return tuple(result)


@lru_cache(maxsize=None)
def standard_aronhold_basis(genus: int) -> AronholdBasis:
    """Deterministic Aronhold basis: standard fundamental set, q = q0, mu = 0."""
    return aronhold_from_fundamental(
        list(standard_fundamental_set(genus)), q_zero(genus), 0)


def label_to_form(basis: AronholdBasis, label: Label) -> QuadraticForm:
    if label.genus != basis.genus:
        raise ValueError("genus mismatch")
    return form_sum(*(basis.forms[i - 1] for i in label.indices))


@lru_cache(maxsize=None)
def _label_table(basis: AronholdBasis) -> dict:
    g = basis.genus
    table = {}
    n = 2 * g + 1
    for k in range(1, n + 1, 2):
        for subset in itertools.combinations(range(1, n + 1), k):
            q = form_sum(*(basis.forms[i - 1] for i in subset))
            table[(q.eps, q.eps_prime)] = subset
    return table


def form_to_label(basis: AronholdBasis, q: QuadraticForm) -> Label:
    subset = _label_table(basis).get((q.eps, q.eps_prime))
    if subset is None:
        raise ValueError("form not reachable from basis (wrong genus?)")
    return Label.of(basis.genus, subset)


# ---------------------------------------------------------------------------
# Steiner sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SteinerSet:
    base: F2Vector
    pairs: tuple[tuple[QuadraticForm, QuadraticForm], ...]

    @property
    def members(self) -> tuple[QuadraticForm, ...]:
        return tuple(q for pair in self.pairs for q in pair)


def steiner_set(v: F2Vector) -> SteinerSet:
    """All odd forms q with q(v) = 0, paired by the translation q -> q+v."""
    if v.is_zero():
        raise ValueError("the zero vector has no Steiner set")
    seen = set()
    pairs = []
    for q in all_forms(v.genus):
        if arf(q) != 1 or q.value(v) != 0:
            continue
        key = q.serialize()
        if key in seen:
            continue
        mate = act(q, v)
        assert arf(mate) == 1
        seen.add(key)
        seen.add(mate.serialize())
        pairs.append(tuple(sorted((q, mate), key=lambda f: f.serialize())))
    pairs.sort(key=lambda p: (p[0].serialize(), p[1].serialize()))
    return SteinerSet(v, tuple(pairs))


def steiner_intersection_size(v: F2Vector, vp: F2Vector) -> int:
    if v.is_zero() or vp.is_zero():
        raise ValueError("Steiner sets are indexed by nonzero vectors")
    if v == vp:
        raise ValueError("vectors must be distinct")
    a = {q.serialize() for q in steiner_set(v).members}
    b = {q.serialize() for q in steiner_set(vp).members}
    return len(a & b)


def steiner_member_count(genus: int) -> int:
    return 2 ** (genus - 1) * (2 ** (genus - 1) - 1)


def steiner_intersection_count(genus: int, pairing: int) -> int:
    if pairing == 0:
        return 2 ** (genus - 1) * (2 ** (genus - 2) - 1)
    return 2 ** (genus - 2) * (2 ** (genus - 1) - 1)


# ---------------------------------------------------------------------------
# Symplectic bases from pairing data
# ---------------------------------------------------------------------------

def symplectic_gram_schmidt(vectors, pairing):
    """Greedy symplectic basis (e_1..e_g, f_1..f_g) from a candidate list.

    `pairing` is a callable giving the symplectic pairing of two candidates.
    Candidates are consumed in list order, so a sorted input makes the result
    canonical.  Returns (es, fs).
    """
    pool = list(vectors)
    es, fs = [], []
    while pool:
        e = pool[0]
        f = next((v for v in pool if pairing(e, v) == 1), None)
        if f is None:
            raise RuntimeError("pairing degenerate on remaining candidates")
        es.append(e)
        fs.append(f)
        pool = [v for v in pool
                if v != e and v != f
                and pairing(v, e) == 0 and pairing(v, f) == 0]
    return es, fs


def symplectic_basis_from_steiner(sets: list[SteinerSet]):
    """Select 2g Steiner sets realizing the intersection-cardinality pattern
    of a symplectic basis; returns (es, fs, coords) where coords maps an odd
    form to its characteristic, by membership tests against the chosen sets.
    """
    if not sets:
        raise ValueError("need the full collection of Steiner sets")
    g = sets[0].base.genus
    if len(sets) != 2 ** (2 * g) - 1:
        raise ValueError("need all 2^(2g)-1 Steiner sets")
    member_sets = {s.base.serialize(): frozenset(q.serialize() for q in s.members)
                   for s in sets}
    c_syz = steiner_intersection_count(g, 0)
    c_azy = steiner_intersection_count(g, 1)

    def pairing(u: F2Vector, v: F2Vector) -> int:
        n = len(member_sets[u.serialize()] & member_sets[v.serialize()])
        if n == c_syz:
            return 0
        if n == c_azy:
            return 1
        raise RuntimeError("intersection cardinality matches neither case")

    bases = sorted((s.base for s in sets), key=lambda v: v.coords)
    es, fs = symplectic_gram_schmidt(bases, pairing)

    def coords(q: QuadraticForm) -> QuadraticForm:
        if arf(q) != 1:
            raise ValueError("membership labeling applies to odd forms")
        key = q.serialize()
        eps = tuple(0 if key in member_sets[e.serialize()] else 1 for e in es)
        epsp = tuple(0 if key in member_sets[f.serialize()] else 1 for f in fs)
        return QuadraticForm(g, eps, epsp)

    return es, fs, coords


# ---------------------------------------------------------------------------
# Label-space machinery (no coordinates needed)
# ---------------------------------------------------------------------------

def label_pairing(genus: int, u, v) -> int:
    """Symplectic pairing of two even label-subsets (vectors), computed from
    the syzygy defect arf(q) + arf(q+u) + arf(q+v) + arf(q+u+v).
    """
    base = (1,)
    return (label_arf(genus, base)
            ^ label_arf(genus, symmetric_difference(base, u))
            ^ label_arf(genus, symmetric_difference(base, v))
            ^ label_arf(genus, symmetric_difference(base, u, v)))


def label_steiner_members(genus: int, v) -> list[tuple[int, ...]]:
    """Odd labels q with q(v)=0, i.e. with q and q^v both odd labels."""
    if not v:
        raise ValueError("Steiner sets are indexed by nonzero vectors")
    n = 2 * genus + 1
    out = []
    for k in range(1, n + 1, 2):
        for subset in itertools.combinations(range(1, n + 1), k):
            if label_arf(genus, subset) != 1:
                continue
            mate = symmetric_difference(subset, v)
            if len(mate) % 2 == 1 and label_arf(genus, mate) == 1:
                out.append(subset)
    return out


@lru_cache(maxsize=None)
def label_frame(genus: int):
    """Canonical coordinates on label space: 2g label-vectors (es, fs) forming
    a symplectic basis, selected greedily in sorted order, plus the label of
    the form with all-zero characteristic.

    Returns (es, fs, label_of_q0) where es/fs are tuples of even label-subsets.
    """
    n = 2 * genus + 1
    vectors = []
    for k in range(2, n + 1, 2):
        vectors.extend(itertools.combinations(range(1, n + 1), k))
    vectors.sort(key=lambda s: (len(s), s))

    def pairing(u, v):
        return label_pairing(genus, u, v)

    es, fs = symplectic_gram_schmidt(vectors, pairing)

    def char_of(label_indices):
        eps = tuple(label_arf(genus, symmetric_difference(label_indices, e))
                    ^ label_arf(genus, label_indices) for e in es)
        epsp = tuple(label_arf(genus, symmetric_difference(label_indices, f))
                     ^ label_arf(genus, label_indices) for f in fs)
        return QuadraticForm(genus, eps, epsp)

    q0_label = None
    for k in range(1, n + 1, 2):
        for subset in itertools.combinations(range(1, n + 1), k):
            q = char_of(subset)
            if not any(q.eps) and not any(q.eps_prime):
                q0_label = subset
                break
        if q0_label is not None:
            break
    if q0_label is None:
        raise RuntimeError("no label has zero characteristic (cannot happen)")
    return tuple(es), tuple(fs), q0_label


def label_characteristic(genus: int, label_indices) -> QuadraticForm:
    """Characteristic of a labeled form in the canonical label frame."""
    es, fs, _ = label_frame(genus)
    a = label_arf(genus, label_indices)
    eps = tuple(label_arf(genus, symmetric_difference(label_indices, e)) ^ a
                for e in es)
    epsp = tuple(label_arf(genus, symmetric_difference(label_indices, f)) ^ a
                 for f in fs)
    return QuadraticForm(genus, eps, epsp)


def sign_exponent(genus: int, p1, p2) -> int:
    """arf(q0 + p1 + p2) for even labels p1, p2: the sign exponent of the
    quotient formula, computed in the canonical label frame.
    """
    _, _, q0_label = label_frame(genus)
    return label_arf(genus, symmetric_difference(q0_label, p1, p2))


def random_symplectic_basis(genus: int, rng: random.Random):
    """Random symplectic basis via random transvections of the standard one."""
    g = genus
    basis = [F2Vector(g, tuple(1 if j == i else 0 for j in range(2 * g)))
             for i in range(2 * g)]
    for _ in range(40):
        w = F2Vector(g, tuple(rng.randint(0, 1) for _ in range(2 * g)))
        if w.is_zero():
            continue
        basis = [v + w if v.pairing(w) == 1 else v for v in basis]
    return basis[:g], basis[g:]
