"""Liouville form, moment maps, the quaternionic structure and brane certificates.

Hyperkähler data live on the realification of Rep(Q̄, d) over Q(i): a complex
coordinate z becomes the pair (Re z, Im z), the metric is the standard one, and
ω_λ(u, v) = g(λu, v).  The operator J is

    J(M_a, M_{a*}) = (−ᵗM̄_{a*}, ᵗM̄_a),

the sign for which ω_J + iω_K is the Liouville form.
"""
from __future__ import annotations

from fractions import Fraction

from . import linalg
from .automorphisms import star_classify
from .errors import Mismatch, NotInvolution, NotStarAutomorphism, ShapeMismatch, WrongField
from .fields import QQ, QQI, GaussianRational
from .quiver import DoubledQuiver
from .reps import RepSpace

BRANE_BY_CLASS = {("symplectic", False): "BBB", ("anti_symplectic", False): "BAA",
                  ("symplectic", True): "ABA", ("anti_symplectic", True): "AAB"}


class SymplecticContext:
    def __init__(self, qd: DoubledQuiver, dims: dict, field):
        if not isinstance(qd, DoubledQuiver):
            raise ShapeMismatch("symplectic data need a doubled quiver")
        self.quiver = qd
        self.field = field
        self.space = RepSpace(qd, dims, field)
        self.base = [a for a in qd.arrows if a in qd.base_arrows]
        self._hk = None

    # --- algebraic side ------------------------------------------------------------
    def _m(self, m) -> dict:
        self.space.check_rep(m)
        return self.space.as_dict(m)

    def omega(self, m, n):
        """Σ_a tr(M_a N_{a*} − M_{a*} N_a)."""
        f = self.field
        M, N = self._m(m), self._m(n)
        total = f.zero
        for a in self.base:
            s = self.quiver.star[a]
            if not M[a] or not M[a][0]:
                continue
            total += linalg.trace(f, linalg.mat_mul(f, M[a], N[s]))
            total -= linalg.trace(f, linalg.mat_mul(f, M[s], N[a]))
        return f.reduce(total)

    def omega_matrix(self):
        basis = list(self.space.basis())
        return tuple(tuple(self.omega(u, v) for v in basis) for u in basis)

    def moment(self, m) -> dict:
        """μ_v = Σ_{h(a)=v} M_a M_{a*} − Σ_{t(a)=v} M_{a*} M_a over base arrows a."""
        f, q = self.field, self.quiver
        M = self._m(m)
        out = {v: linalg.zeros(f, self.space.dims[v], self.space.dims[v]) for v in q.vertices}
        for a in self.base:
            s = q.star[a]
            h, t = q.head[a], q.tail[a]
            if self.space.dims[h] and self.space.dims[t]:
                out[h] = linalg.mat_add(f, out[h], linalg.mat_mul(f, M[a], M[s]))
                out[t] = linalg.mat_sub(f, out[t], linalg.mat_mul(f, M[s], M[a]))
        return out

    def moment_pairing(self, m, B: dict):
        """Σ_a tr(M_{a*}(B_{h(a)} M_a − M_a B_{t(a)}))."""
        f, q = self.field, self.quiver
        M = self._m(m)
        total = f.zero
        for a in self.base:
            s = q.star[a]
            h, t = q.head[a], q.tail[a]
            if not (self.space.dims[h] and self.space.dims[t]):
                continue
            inner = linalg.mat_sub(f, linalg.mat_mul(f, B[h], M[a]), linalg.mat_mul(f, M[a], B[t]))
            total += linalg.trace(f, linalg.mat_mul(f, M[s], inner))
        return f.reduce(total)

    def trace_pairing(self, mu: dict, B: dict):
        f = self.field
        return f.reduce(sum(linalg.trace(f, linalg.mat_mul(f, mu[v], B[v]))
                            for v in self.quiver.vertices if self.space.dims[v]))

    def moment_fiber(self, m, eta: dict) -> bool:
        mu = self.moment(m)
        f = self.field
        return all(mu[v] == linalg.scalar_matrix(f, eta.get(v, 0), self.space.dims[v])
                   for v in self.quiver.vertices)

    def conjugate_moment(self, g, mu: dict) -> dict:
        f = self.field
        out = {}
        for v, B in zip(self.quiver.vertices, g):
            out[v] = linalg.mat_mul(f, linalg.mat_mul(f, B, mu[v]), linalg.inverse(f, B)) if B else B
        return out

    def lie_act(self, s, B: dict) -> dict:
        """Differential of Ψ_σ: B_{σ⁻¹(v)}, negated and transposed when contravariant."""
        inv = s.inverse()
        f = self.field
        out = {}
        for v in self.quiver.vertices:
            X = B[inv.vertex_map[v]]
            out[v] = X if s.covariant else linalg.mat_neg(f, linalg.transpose(X)) if X else X
        return out

    def random_lie(self, rng, bound: int = 5) -> dict:
        f = self.field
        return {v: tuple(tuple(f.reduce(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
                               for _ in range(n)) for _ in range(n))
                for v, n in self.space.dims.items()}

    def random_rep(self, rng, bound: int = 5):
        f = self.field
        return self.space.unflatten(tuple(f.reduce(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)))
                                          for _ in range(self.space.size)))

    def pullback_omega_sign(self, s) -> int | None:
        """+1 / −1 if ω(Φ_σ u, Φ_σ v) = ±ω(u, v) on the full basis, else None."""
        basis = list(self.space.basis())
        images = [self.space.phi(s, u) for u in basis]
        f = self.field
        signs = set()
        for u, fu in zip(basis, images):
            for v, fv in zip(basis, images):
                a, b = self.omega(u, v), self.omega(fu, fv)
                if a == b and f.is_zero(a):
                    continue
                signs.add(1 if b == a else -1 if b == f.reduce(-a) else 0)
        if signs <= {1}:
            return 1
        if signs == {-1}:
            return -1
        return None

    def moment_sign(self, s, m, B) -> int | None:
        """Sign t with μ(σM)·σ(B) = t·(μ(M)·B), or None when neither sign fits."""
        f = self.field
        lhs = self.moment_pairing(self.space.phi(s, m), self.lie_act(s, B))
        rhs = self.moment_pairing(m, B)
        if lhs == rhs:
            return 1
        return -1 if lhs == f.reduce(-rhs) else None

    def pullback_sign(self, s, target: str = "omega", conjugate: bool = False) -> int | None:
        """Sign of σ (or σ∘τ) against ``target``: omega, I, J, K, omega_I/J/K or g."""
        if s is not None and star_classify(s) == "not_star":
            raise NotStarAutomorphism("pullback signs need a star automorphism")
        if target == "omega" and not conjugate:
            return self.pullback_omega_sign(s) if s is not None else 1
        hk = self.hk_structures()
        F = self.real_operator(self.map_of(s, conjugate))
        if target == "omega":
            target = "omega_C"
        if target == "omega_C":
            j, k = hk.form_sign(F, "J"), hk.form_sign(F, "K")
            return j if j == k else None
        if target == "g":
            return hk.metric_sign(F)
        if target.startswith("omega_"):
            return hk.form_sign(F, target[-1])
        return hk.sign_with(F, target)

    def fixed_subspace(self, s):
        """RREF basis (flat coordinates) of {M : Φ_σ(M) = M}."""
        f = self.field
        L = self.space.phi_matrix(s)
        n = self.space.size
        rows = [tuple(f.reduce(L[r][c] - (1 if r == c else 0)) for c in range(n)) for r in range(n)]
        return linalg.nullspace(f, rows, n)

    def restricted_omega_rank(self, basis) -> int:
        reps = [self.space.unflatten(v) for v in basis]
        gram = [[self.omega(u, v) for v in reps] for u in reps]
        return linalg.rank(self.field, gram, len(reps)) if reps else 0

    # --- real structure over Q(i) ----------------------------------------------------
    def _require_qi(self):
        if self.field is not QQI:
            raise WrongField("hyperkähler structures need the Gaussian rationals")

    def realify(self, m) -> tuple:
        out = []
        for z in self.space.flatten(m):
            z = QQI.reduce(z)
            out += [z.re, z.im]
        return tuple(out)

    def complexify(self, vec):
        return self.space.unflatten(tuple(GaussianRational(vec[2 * k], vec[2 * k + 1])
                                          for k in range(len(vec) // 2)))

    def real_basis(self):
        n = 2 * self.space.size
        for k in range(n):
            yield tuple(Fraction(1) if j == k else Fraction(0) for j in range(n))

    def real_operator(self, fn):
        """Matrix over Q (columns = images) of a real-linear map of Rep(Q̄, d)."""
        cols = [self.realify(fn(self.complexify(e))) for e in self.real_basis()]
        return linalg.transpose(cols)

    def apply_i(self, m):
        i = QQI.i
        return tuple(linalg.mat_scale(QQI, i, A) for A in m)

    def apply_j(self, m, literal: bool = False):
        q = self.quiver
        M = self.space.as_dict(m)
        out = {}
        for a in self.base:
            s = q.star[a]
            ca = linalg.conj_transpose(QQI, M[a]) if M[a] and M[a][0] else M[s]
            cs = linalg.conj_transpose(QQI, M[s]) if M[s] and M[s][0] else M[a]
            if literal:
                out[a], out[s] = cs, linalg.mat_neg(QQI, ca)
            else:
                out[a], out[s] = linalg.mat_neg(QQI, cs), ca
        return tuple(out[a] for a in q.arrows)

    def apply_k(self, m, literal: bool = False):
        return self.apply_i(self.apply_j(m, literal))

    def conjugate(self, m):
        return tuple(linalg.mat_conj(QQI, A) for A in m)

    def hk_structures(self, literal_j: bool = False) -> "HKStructure":
        self._require_qi()
        if literal_j:
            return HKStructure(self, True)
        if self._hk is None:
            self._hk = HKStructure(self)
        return self._hk

    def mu_real(self, m) -> dict:
        """(i/2)(Σ_{h(ā)=v} M_ā M_ā† − Σ_{t(ā)=v} M_ā† M_ā) over all arrows of Q̄."""
        self._require_qi()
        q = self.quiver
        M = self.space.as_dict(m)
        half_i = GaussianRational(0, Fraction(1, 2))
        out = {v: linalg.zeros(QQI, self.space.dims[v], self.space.dims[v]) for v in q.vertices}
        for a in q.arrows:
            h, t = q.head[a], q.tail[a]
            if not (self.space.dims[h] and self.space.dims[t]):
                continue
            dag = linalg.conj_transpose(QQI, M[a])
            out[h] = linalg.mat_add(QQI, out[h], linalg.mat_mul(QQI, M[a], dag))
            out[t] = linalg.mat_sub(QQI, out[t], linalg.mat_mul(QQI, dag, M[a]))
        return {v: linalg.mat_scale(QQI, half_i, X) for v, X in out.items()}

    # --- automorphisms ---------------------------------------------------------------
    def map_of(self, s, conjugate: bool = False):
        if s is None:
            return self.conjugate if conjugate else (lambda m: m)
        if conjugate:
            return lambda m: self.space.phi(s, self.conjugate(m))
        return lambda m: self.space.phi(s, m)

    def brane_type(self, s, conjugate: bool = False) -> "BraneCertificate":
        return BraneCertificate(self, s, conjugate)


class HKStructure:
    """I, J, K as rational matrices on the realification, with g = identity Gram."""

    def __init__(self, ctx: SymplecticContext, literal_j: bool = False):
        self.ctx = ctx
        self.literal_j = literal_j
        self.I = ctx.real_operator(ctx.apply_i)
        self.J = ctx.real_operator(lambda m: ctx.apply_j(m, literal_j))
        self.K = ctx.real_operator(lambda m: ctx.apply_k(m, literal_j))
        self.n = len(self.I)
        self.G = linalg.identity(QQ, self.n)

    def mul(self, A, B):
        return linalg.mat_mul(QQ, A, B)

    def operator(self, name):
        return {"I": self.I, "J": self.J, "K": self.K}[name]

    def form(self, name):
        """Gram matrix of ω_λ(u, v) = g(λu, v)."""
        return linalg.transpose(self.operator(name))

    def evaluate(self, name, u: tuple, v: tuple):
        lam = self.operator(name)
        lu = linalg.mat_vec(QQ, lam, u)
        return sum(a * b for a, b in zip(lu, v))

    def quaternion_failures(self) -> list:
        minus = linalg.scalar_matrix(QQ, -1, self.n)
        bad = []
        for name in "IJK":
            A = self.operator(name)
            if self.mul(A, A) != minus:
                bad.append(f"{name}^2 != -1")
            if self.mul(linalg.transpose(A), A) != self.G:
                bad.append(f"g not {name}-invariant")
        if self.mul(self.I, self.J) != self.K:
            bad.append("K != IJ")
        return bad

    def complex_form_matches(self) -> bool:
        """ω_J(u,v) + iω_K(u,v) equals the Liouville form on every pair of real basis vectors."""
        ctx = self.ctx
        basis = list(ctx.real_basis())
        for u in basis:
            mu = ctx.complexify(u)
            for v in basis:
                lhs = GaussianRational(self.evaluate("J", u, v), self.evaluate("K", u, v))
                if lhs != ctx.omega(mu, ctx.complexify(v)):
                    return False
        return True

    def sign_with(self, F, name) -> int | None:
        lam = self.operator(name)
        a, b = self.mul(F, lam), self.mul(lam, F)
        if a == b:
            return 1
        if a == linalg.mat_neg(QQ, b):
            return -1
        return None

    def form_sign(self, F, name) -> int | None:
        W = self.form(name)
        pulled = self.mul(self.mul(linalg.transpose(F), W), F)
        if pulled == W:
            return 1
        if pulled == linalg.mat_neg(QQ, W):
            return -1
        return None

    def metric_sign(self, F) -> int | None:
        return 1 if self.mul(linalg.transpose(F), F) == self.G else None


def _sign_text(s):
    return {1: "+", -1: "-", None: "not_equivariant"}[s]


class BraneCertificate:
    """Brane type of the fixed locus of σ (optionally composed with conjugation)."""

    def __init__(self, ctx: SymplecticContext, s, conjugate: bool = False):
        ctx._require_qi()
        self.ctx = ctx
        self.sigma = s
        self.conjugate = conjugate
        label = "symplectic" if s is None else star_classify(s)
        if label == "not_star":
            raise NotStarAutomorphism("brane types need a star automorphism")
        if s is not None and s.order() > 2:
            raise NotInvolution("brane classification needs an involution")
        self.star_class = label
        hk = ctx.hk_structures()
        F = ctx.real_operator(ctx.map_of(s, conjugate))
        self.signs = {name: hk.sign_with(F, name) for name in "IJK"}
        self.form_signs = {f"omega_{name}": hk.form_sign(F, name) for name in "IJK"}
        self.metric = hk.metric_sign(F)
        self.combinatorial = BRANE_BY_CLASS[(label, conjugate)]
        if None in self.signs.values():
            raise Mismatch("automorphism is not (anti)holomorphic for some structure")
        self.computed = "".join("B" if self.signs[n] == 1 else "A" for n in "IJK")
        if self.computed != self.combinatorial:
            raise Mismatch(f"sign table gives {self.computed}, classification gives {self.combinatorial}")
        self.type = self.computed

    def to_json(self) -> dict:
        return {"sigma": None if self.sigma is None else self.sigma.to_json(),
                "conjugation": self.conjugate,
                "class": self.star_class,
                "signs": {k: _sign_text(v) for k, v in self.signs.items()},
                "form_signs": {k: _sign_text(v) for k, v in self.form_signs.items()},
                "metric": _sign_text(self.metric),
                "type": self.type}
