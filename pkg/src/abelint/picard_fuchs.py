"""Exact Pfaffian systems for period vectors of level-curve families.

For the period vector X(lambda) of the n^2 basis 1-forms over a cycle on
{H = 0} the derivation produces, entirely over Q(lambda):

  * Pstar(t):  H m_a = sum_b (Pstar_ab o H) m_b + dH ^ eta_a
  * Q^s:       x^s eta_a = sum_b (Q^s_ab o H) w_b + u dH + dv

whence  Pstar(0) dX/dlambda_s = Q^s(0) X  for every coefficient lambda_s.
Restricting to the pencil {H0 = t} (i.e. lambda_00 = c0 - t) yields a linear
ODE system dX/dt = A(t) X with A = -(Pstar(0)^{-1} Q^{(0,0)}(0)) evaluated at
lambda_00 = c0 - t.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .division import (XVARS, Decomposition, Hamiltonian, basis_exponents,
                       basis_one_form, basis_two_form, divide_one_form,
                       divide_two_form, is_basis_regular)
from .errors import DegenerateBasis, LineInLocus, NoSolution, UnsupportedInput
from .linalg import FieldMatrix, invert, solve_linear
from .polynomials import MultiPoly
from .ratfunc import RatFunc, ratfunc_lcm_den, size_of


class PfaffianSystem:
    """Exact output of the derivation for one Hamiltonian."""

    def __init__(self, H, Pstar, etas, Q, free_var):
        self.H = H
        self.n = H.n
        self.ell = H.ell
        self.Pstar = Pstar          # FieldMatrix over lambda + t
        self.etas = etas            # per-row (E1, E2) RatFunc pairs
        self.Q = Q                  # dict s-exponent -> FieldMatrix over lambda
        self.free_var = free_var    # name of the free-term coefficient

    @property
    def Pstar0(self):
        return self.Pstar.subs({"t": MultiPoly.const(0)})

    def Ps0(self, s):
        """Matrix P^s with d/dlambda_s (Pstar0 X) = P^s X."""
        dP = self.Pstar0.diff(_lname(s, self.free_var))
        return dP + self.Q[tuple(s)]

    def check_identities(self) -> bool:
        """Re-verify every division identity exactly."""
        H = self.H
        ok = True
        for ai, alpha in enumerate(basis_exponents(self.n)):
            target = RatFunc(H.poly * basis_two_form(alpha))
            dec = Decomposition(H, "two", target, list(self.Pstar.data[ai]),
                                eta=self.etas[ai])
            ok = ok and dec.verify()
        return ok


def _lname(s, free_var):
    if tuple(s) == (0, 0):
        return free_var
    return f"l{s[0]}{s[1]}"


def derive_pfaffian(H: Hamiltonian, s_list=None, check_regular=False) -> PfaffianSystem:
    """Derive the exact Pfaffian structure for H.

    H must carry at least the free-term coefficient as a symbolic variable so
    that level shifts stay inside the family.  A regular monomial basis
    guarantees success; with `check_regular=False` (default) the divisions are
    attempted regardless and fail with SingularDivision when impossible.
    """
    n = H.n
    if not H.lvars:
        raise UnsupportedInput("Hamiltonian needs at least one symbolic coefficient")
    free_var = "l00" if "l00" in H.lvars else H.lvars[0]
    if check_regular:
        try:
            hp = H.principal_part()
            if not hp.is_zero() and not is_basis_regular(H):
                raise DegenerateBasis("monomial basis is not regular for this Hamiltonian")
        except UnsupportedInput:
            pass  # symbolic principal part: generically regular
    alphas = basis_exponents(n)
    rows = []
    etas = []
    for alpha in alphas:
        dec = divide_two_form(H, H.poly * basis_two_form(alpha))
        rows.append(dec.p)
        etas.append(dec.eta)
    Pstar = FieldMatrix(rows)
    if s_list is None:
        s_list = sorted(set(alphas) | {(0, 0)})
    Q = {}
    for s in s_list:
        xs = MultiPoly(XVARS, {tuple(s): Fraction(1)})
        qrows = []
        for ai in range(len(alphas)):
            e1, e2 = etas[ai]
            dec = divide_one_form(H, e1 * RatFunc(xs), e2 * RatFunc(xs))
            qrows.append(dec.p)
        Q[tuple(s)] = FieldMatrix(qrows)
    return PfaffianSystem(H, Pstar, etas, Q, free_var)


class LinearODESystem:
    """dX/dt = A(t) X with exact rational entries and numeric helpers."""

    def __init__(self, A: FieldMatrix, singular_poly: MultiPoly):
        self.A = A
        self.ell = A.rows
        self.singular_poly = singular_poly
        self._roots = None
        self._num = None

    @property
    def singular_points(self):
        if self._roots is None:
            coeffs = self.singular_poly.univar_coeffs("t")
            arr = [complex(c) if not isinstance(c, Fraction) else complex(float(c), 0)
                   for c in coeffs]
            while len(arr) > 1 and arr[-1] == 0:
                arr.pop()
            if len(arr) <= 1:
                self._roots = np.array([], dtype=complex)
            else:
                self._roots = np.roots(arr[::-1])
        return self._roots

    def _compiled(self):
        if self._num is None:
            comp = []
            for row in self.A.data:
                crow = []
                for e in row:
                    nc = [complex(float(c), 0.0) for c in e.num.univar_coeffs("t")]
                    dc = [complex(float(c), 0.0) for c in e.den.univar_coeffs("t")]
                    crow.append((np.array(nc[::-1]), np.array(dc[::-1])))
                comp.append(crow)
            self._num = comp
        return self._num

    def eval(self, t: complex):
        comp = self._compiled()
        out = np.empty((self.ell, self.ell), dtype=complex)
        for i, row in enumerate(comp):
            for j, (nc, dc) in enumerate(row):
                out[i, j] = np.polyval(nc, t) / np.polyval(dc, t)
        return out

    def dist_to_singular(self, t: complex) -> float:
        pts = self.singular_points
        if len(pts) == 0:
            return float("inf")
        return float(np.min(np.abs(pts - t)))


def restrict_to_pencil(sys: PfaffianSystem, lambda_hat=None, free_term_value=0,
                       s=(0, 0)) -> LinearODESystem:
    """Restrict to the line lambda_s sweep: lambda_00 = c0 - t.

    `lambda_hat` gives concrete values for any remaining symbolic
    coefficients other than the free term.
    """
    if tuple(s) != (0, 0):
        raise UnsupportedInput("only free-term pencils are supported")
    lam = dict(lambda_hat or {})
    fv = sys.free_var
    P0 = sys.Pstar0
    Qs = sys.Q[(0, 0)]
    c0 = Fraction(free_term_value)
    line = MultiPoly.const(c0, ("t",)) - MultiPoly.var("t")
    subsmap = {k: MultiPoly.const(Fraction(v)) for k, v in lam.items()}
    subsmap[fv] = line
    P0 = P0.subs(subsmap)
    Qs = Qs.subs(subsmap)
    leftover = set()
    for e in P0.flatten() + Qs.flatten():
        leftover |= set(e.num.effective_vars()) | set(e.den.effective_vars())
    leftover -= {"t"}
    if leftover:
        raise UnsupportedInput(f"unresolved symbolic coefficients: {sorted(leftover)}")
    ell = sys.ell
    cols = []
    for j in range(ell):
        rhs = [Qs.data[i][j] for i in range(ell)]
        try:
            cols.append(solve_linear(P0, rhs, verify=True))
        except NoSolution as exc:
            raise LineInLocus(f"constant term is singular along the pencil: {exc}") from exc
    A = FieldMatrix([[-cols[j][i] for j in range(ell)] for i in range(ell)])
    sing = ratfunc_lcm_den(A.flatten()).extend(("t",))
    return LinearODESystem(A, sing)


def size_report(sys: PfaffianSystem) -> dict:
    """Measured sizes/degrees of the derived matrices."""
    n = sys.n
    entries = sys.Pstar.flatten()
    for M in sys.Q.values():
        entries += M.flatten()
    sizes = [size_of(e) for e in entries]
    degs_t = [e.num.degree_in("t") for e in sys.Pstar.flatten() if not e.is_zero()]
    lvars = sys.H.lvars
    degs_l = [max(e.num.degree_in(lvars), e.den.degree_in(lvars))
              for e in entries if not e.is_zero()]
    return {
        "n": n,
        "ell": sys.ell,
        "num_coeffs": sys.H.num_coeffs,
        "total_size": str(sum(sizes)),
        "max_entry_size": str(max(sizes)) if sizes else "0",
        "max_t_degree": int(max(degs_t)) if degs_t else 0,
        "max_lambda_degree": int(max(d for d in degs_l)) if degs_l else 0,
    }
