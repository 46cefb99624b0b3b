"""Sparse multivariate polynomials over Q (or Q(i)) with exact coefficients.

Terms live in a dict mapping exponent tuples to Fraction (or GaussianRational)
coefficients.  Variables are always stored as a sorted tuple of names, so two
polynomials in the same variables compare structurally.  The graded
lexicographic order fixes leading terms, canonical signs and serialization
order.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import UnsupportedInput
from .qi import GaussianRational, as_coef, coef_abs, coef_conj

NEG_INF = float("-inf")


def _grlex_key(exp):
    return (sum(exp), exp)


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        vs = tuple(variables)
        if list(vs) != sorted(vs):
            raise ValueError("variables must be sorted")
        self.vars = vs
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = as_coef(c)
                if isinstance(c, Fraction) and c == 0:
                    continue
                if isinstance(c, GaussianRational) and not c:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != len(vs):
                    raise ValueError("exponent arity mismatch")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent")
                clean[exp] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------
    @staticmethod
    def zero(variables=()):
        return MultiPoly(sorted(variables), {})

    @staticmethod
    def const(c, variables=()):
        vs = sorted(variables)
        return MultiPoly(vs, {tuple([0] * len(vs)): c})

    @staticmethod
    def var(name, variables=None):
        vs = sorted(set(variables or ()) | {name})
        exp = tuple(1 if v == name else 0 for v in vs)
        return MultiPoly(vs, {exp: 1})

    # -- variable management ---------------------------------------------------
    def extend(self, variables):
        """Reinterpret over a superset of variables."""
        vs = tuple(sorted(set(self.vars) | set(variables)))
        if vs == self.vars:
            return self
        pos = [vs.index(v) for v in self.vars]
        terms = {}
        for exp, c in self.terms.items():
            new = [0] * len(vs)
            for p, e in zip(pos, exp):
                new[p] = e
            terms[tuple(new)] = c
        return MultiPoly(vs, terms)

    def shrink(self):
        """Drop variables that do not occur."""
        used = set()
        for exp in self.terms:
            for i, e in enumerate(exp):
                if e:
                    used.add(i)
        if len(used) == len(self.vars):
            return self
        keep = sorted(used)
        vs = tuple(self.vars[i] for i in keep)
        terms = {tuple(exp[i] for i in keep): c for exp, c in self.terms.items()}
        return MultiPoly(vs, terms)

    @staticmethod
    def align(a, b):
        vs = sorted(set(a.vars) | set(b.vars))
        return a.extend(vs), b.extend(vs)

    # -- predicates / inspection ------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        if not self.terms:
            return Fraction(0)
        return next(iter(self.terms.values()))

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, names):
        """Total degree counting only the listed variables."""
        if isinstance(names, str):
            names = (names,)
        idx = [self.vars.index(v) for v in names if v in self.vars]
        if not self.terms:
            return NEG_INF
        return max(sum(e[i] for i in idx) for e in self.terms)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def coeff(self, exp):
        return self.terms.get(tuple(exp), Fraction(0))

    def has_gaussian(self):
        return any(isinstance(c, GaussianRational) for c in self.terms.values())

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return MultiPoly.const(other, self.vars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MultiPoly.align(self, o)
        terms = dict(a.terms)
        for exp, c in b.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return MultiPoly(a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = MultiPoly.align(self, o)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                exp = tuple(x + y for x, y in zip(e1, e2))
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of polynomial")
        result = MultiPoly.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.const(other, self.vars)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = MultiPoly.align(self, other)
        return a.terms == b.terms

    def __hash__(self):
        p = self.shrink()
        return hash((p.vars, frozenset(p.terms.items())))

    # -- calculus ---------------------------------------------------------------
    def diff(self, name):
        if name not in self.vars:
            return MultiPoly.zero(self.vars)
        i = self.vars.index(name)
        terms = {}
        for exp, c in self.terms.items():
            if exp[i] == 0:
                continue
            new = list(exp)
            new[i] -= 1
            terms[tuple(new)] = c * exp[i]
        return MultiPoly(self.vars, terms)

    def subs(self, mapping):
        """Substitute variables by polynomials/constants; absent names ignored."""
        mapping = {k: (v if isinstance(v, MultiPoly) else MultiPoly.const(v))
                   for k, v in mapping.items() if k in self.vars}
        if not mapping:
            return self
        keep = [v for v in self.vars if v not in mapping]
        out_vars = set(keep)
        for p in mapping.values():
            out_vars |= set(p.vars)
        result = MultiPoly.zero(sorted(out_vars))
        # cache powers of substituted values
        pow_cache = {k: {0: MultiPoly.const(1, sorted(out_vars))} for k in mapping}

        def power(name, k):
            cache = pow_cache[name]
            if k not in cache:
                cache[k] = power(name, k - 1) * mapping[name]
            return cache[k]

        for exp, c in self.terms.items():
            term = MultiPoly.const(c, sorted(out_vars))
            for v, e in zip(self.vars, exp):
                if e == 0:
                    continue
                if v in mapping:
                    term = term * power(v, e)
                else:
                    term = term * MultiPoly.var(v, sorted(out_vars)) ** e
            result = result + term
        return result

    def eval_complex(self, point):
        """Numeric evaluation; point maps every variable to a complex number."""
        total = 0j
        for exp, c in self.terms.items():
            v = complex(c) if isinstance(c, GaussianRational) else complex(float(c), 0.0)
            for name, e in zip(self.vars, exp):
                if e:
                    v *= point[name] ** e
            total += v
        return total

    # -- norms / content -----------------------------------------------------------
    def l1_norm(self):
        """Sum of absolute values of coefficients; exact when all are exact."""
        total = Fraction(0)
        for c in self.terms.values():
            total = total + coef_abs(c)
        return total

    def conj_coeffs(self):
        return MultiPoly(self.vars, {e: coef_conj(c) for e, c in self.terms.items()})

    def rational_content(self):
        """Positive rational c with self/c having coprime integer coefficients.

        Requires Fraction coefficients; sign excluded (content is positive).
        """
        if self.is_zero():
            return Fraction(0)
        if self.has_gaussian():
            num_g = 0
            den_l = 1
            for c in self.terms.values():
                g = c if isinstance(c, GaussianRational) else GaussianRational(c, 0)
                num_g = math.gcd(num_g, g.re.numerator, g.im.numerator)
                den_l = den_l * g.re.denominator // math.gcd(den_l, g.re.denominator)
                den_l = den_l * g.im.denominator // math.gcd(den_l, g.im.denominator)
            return Fraction(num_g, den_l)
        num_g = 0
        den_l = 1
        for c in self.terms.values():
            num_g = math.gcd(num_g, c.numerator)
            den_l = den_l * c.denominator // math.gcd(den_l, c.denominator)
        return Fraction(num_g, den_l)

    def primitive(self):
        """(content*sign, primitive part) with positive leading coefficient."""
        if self.is_zero():
            return Fraction(0), self
        c = self.rational_content()
        _, lead = self.leading()
        if isinstance(lead, GaussianRational):
            if lead.re < 0 or (lead.re == 0 and lead.im < 0):
                c = -c
        elif lead < 0:
            c = -c
        inv = 1 / c
        return c, MultiPoly(self.vars, {e: v * inv for e, v in self.terms.items()})

    # -- division ------------------------------------------------------------------
    def divexact(self, divisor):
        """Exact division; raises ValueError if the division is not exact."""
        if isinstance(divisor, (int, Fraction, GaussianRational)):
            inv = 1 / as_coef(divisor)
            return MultiPoly(self.vars, {e: c * inv for e, c in self.terms.items()})
        q, r = self.divmod_multi(divisor)
        if not r.is_zero():
            raise ValueError("inexact polynomial division")
        return q

    def divmod_multi(self, divisor):
        """Multivariate division by a single divisor under graded lex."""
        a, b = MultiPoly.align(self, divisor)
        if b.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_exp, lead_c = b.leading()
        q_terms = {}
        rem = MultiPoly(a.vars, dict(a.terms))
        r_terms = {}
        while not rem.is_zero():
            exp, c = rem.leading()
            diff = tuple(x - y for x, y in zip(exp, lead_exp))
            if any(d < 0 for d in diff):
                # leading term cannot be reduced; move it to the remainder
                r_terms[exp] = c
                t = dict(rem.terms)
                del t[exp]
                rem = MultiPoly(a.vars, t)
                continue
            qc = c / lead_c
            q_terms[diff] = q_terms.get(diff, Fraction(0)) + qc
            rem = rem - MultiPoly(a.vars, {diff: qc}) * b
        return MultiPoly(a.vars, q_terms), MultiPoly(a.vars, r_terms)

    # -- univariate views -------------------------------------------------------
    def effective_vars(self):
        return self.shrink().vars

    def univar_coeffs(self, name):
        """Dense coefficient list [c0, c1, ...] of a univariate polynomial."""
        p = self.shrink()
        if p.vars not in ((), (name,)):
            raise UnsupportedInput(f"polynomial is not univariate in {name}: vars {p.vars}")
        if p.vars == ():
            return [p.constant_value()] if p.terms else [Fraction(0)]
        deg = max(e[0] for e in p.terms) if p.terms else 0
        out = [Fraction(0)] * (deg + 1)
        for exp, c in p.terms.items():
            out[exp[0]] = c
        return out

    @staticmethod
    def from_univar_coeffs(coeffs, name):
        return MultiPoly((name,), {(i,): c for i, c in enumerate(coeffs)})

    def coeff_split(self, front):
        """Group terms by exponents of `front` variables.

        Returns dict: exponent-tuple over `front` -> MultiPoly in the rest.
        """
        front = tuple(front)
        idx = [self.vars.index(v) for v in front if v in self.vars]
        rest = [v for v in self.vars if v not in front]
        out = {}
        for exp, c in self.terms.items():
            fexp = tuple(exp[self.vars.index(v)] if v in self.vars else 0 for v in front)
            rexp = tuple(exp[self.vars.index(v)] for v in rest)
            out.setdefault(fexp, {})[rexp] = c
        return {fe: MultiPoly(rest, terms) for fe, terms in out.items()}

    # -- gcd ----------------------------------------------------------------------
    @staticmethod
    def gcd(a, b):
        """Monic/primitive gcd; Euclid for univariate, sympy for multivariate."""
        a = a.shrink()
        b = b.shrink()
        if a.is_zero():
            return b.primitive()[1] if not b.is_zero() else b
        if b.is_zero():
            return a.primitive()[1]
        evars = sorted(set(a.vars) | set(b.vars))
        if len(evars) <= 1:
            return _gcd_univar(a.extend(evars), b.extend(evars))
        return _gcd_sympy(a.extend(evars), b.extend(evars))

    # -- sympy bridge ----------------------------------------------------------
    def to_sympy(self):
        import sympy

        if self.has_gaussian():
            syms = [sympy.Symbol(v) for v in self.vars]
            expr = sympy.Integer(0)
            for exp, c in self.terms.items():
                cc = sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im) \
                    if isinstance(c, GaussianRational) else sympy.Rational(c)
                mono = sympy.Integer(1)
                for s, e in zip(syms, exp):
                    mono *= s ** e
                expr += cc * mono
            return expr
        syms = [sympy.Symbol(v) for v in self.vars]
        expr = sympy.Integer(0)
        for exp, c in self.terms.items():
            mono = sympy.Integer(1)
            for s, e in zip(syms, exp):
                mono *= s ** e
            expr += sympy.Rational(c) * mono
        return expr

    @staticmethod
    def from_sympy(expr, variables):
        import sympy

        vs = sorted(variables)
        poly = sympy.Poly(expr, *[sympy.Symbol(v) for v in vs]) if vs else None
        terms = {}
        if poly is None:
            q = sympy.Rational(expr)
            return MultiPoly.const(Fraction(q.p, q.q))
        for exp, c in poly.terms():
            c = sympy.nsimplify(c)
            re, im = c.as_real_imag()
            re = sympy.Rational(re)
            im = sympy.Rational(im)
            if im == 0:
                coef = Fraction(re.p, re.q)
            else:
                coef = GaussianRational(Fraction(re.p, re.q), Fraction(im.p, im.q))
            terms[tuple(int(e) for e in exp)] = coef
        return MultiPoly(vs, terms)

    # -- output ---------------------------------------------------------------
    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[exp]
            mono = "*".join(f"{v}^{e}" if e > 1 else v
                            for v, e in zip(self.vars, exp) if e)
            if mono:
                bits.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                bits.append(f"{c}")
        return " + ".join(bits)


def _gcd_univar(a, b):
    """Primitive-monic Euclid over Q or Q(i) for (at most) one variable."""
    if a.is_constant() or b.is_constant():
        return MultiPoly.const(1, a.vars)
    name = a.vars[0]
    fa = a.univar_coeffs(name)
    fb = b.univar_coeffs(name)

    def deg(f):
        return len(f) - 1

    def rem(f, g):
        f = list(f)
        while deg(f) >= deg(g) and any(c != 0 for c in f):
            if not f[-1]:
                f.pop()
                continue
            q = f[-1] / g[-1]
            shift = deg(f) - deg(g)
            for i, gc in enumerate(g):
                f[i + shift] = f[i + shift] - q * gc
            f.pop()
            while f and not f[-1]:
                f.pop()
            if not f:
                return [Fraction(0)]
        return f

    f, g = fa, fb
    if deg(f) < deg(g):
        f, g = g, f
    while any(c != 0 for c in g) and deg(g) >= 0:
        f, g = g, rem(f, g)
        if len(g) == 1 and g[0] == 0:
            break
        if deg(g) == 0 and g[0] != 0:
            return MultiPoly.const(1, a.vars)
    p = MultiPoly.from_univar_coeffs(f, name)
    _, prim = p.primitive()
    return prim


def _gcd_sympy(a, b):
    import sympy

    g = sympy.gcd(a.to_sympy(), b.to_sympy())
    vs = sorted(set(a.vars) | set(b.vars))
    p = MultiPoly.from_sympy(g, vs)
    if p.is_zero():
        return p
    _, prim = p.primitive()
    return prim


def poly_lcm(a, b):
    g = MultiPoly.gcd(a, b)
    if g.is_zero():
        return g
    return a.extend(sorted(set(a.vars) | set(b.vars))).divexact(g) * b
