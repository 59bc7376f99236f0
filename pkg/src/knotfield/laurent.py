"""Exact multivariate integer polynomials and Laurent fractions.

Polynomials are sparse dicts mapping exponent tuples to nonzero integer
coefficients.  A Laurent fraction is a polynomial numerator over a monomial
denominator, kept in reduced form: no variable with positive denominator
exponent divides the numerator.

Heavy products and exact divisions are performed by packing polynomials
into single big integers (one fixed-width little-endian slot per point of
the mixed-radix exponent box) so that polynomial multiplication becomes one
machine-level integer multiplication.  Signed inputs are split into
positive and negative parts, multiplied as four nonnegative products, and
recombined, which keeps slot values nonnegative and unpacking trivial.
When both operands are homogeneous the variable with the widest exponent
range is dropped from the box and restored from the total degree, which is
what keeps deep cluster mutations (large homogeneous numerators) cheap.
Exact division runs the same packing through integer divmod: a nonzero
remainder disproves divisibility, and a zero remainder is certified by a
coefficient-bound check (with a full re-multiplication fallback), so the
fast path never returns an unverified quotient.  Packed images above
``_PACK_BYTE_LIMIT`` fall back to direct dict arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import NonLaurentResult

_PACK_BYTE_LIMIT = 1 << 26


class InexactDivision(ArithmeticError):
    """Polynomial division left a remainder."""


class Polynomial:
    """Multivariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("nvars", "terms", "_key")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
                clean[tuple(exps)] = coeff
        self.terms = clean
        self._key = None

    # construction ----------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        """The variable x_index, 1-based."""
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], nvars: int, coeff: int = 1) -> "Polynomial":
        return cls(nvars, {tuple(exps): coeff})

    # inspection -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def max_degrees(self) -> tuple[int, ...]:
        out = [0] * self.nvars
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > out[i]:
                    out[i] = e
        return tuple(out)

    def content_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all terms (the monomial content)."""
        if not self.terms:
            return (0,) * self.nvars
        out = [min(exps[i] for exps in self.terms) for i in range(self.nvars)]
        return tuple(out)

    def total_degree(self) -> int:
        return max((sum(exps) for exps in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {sum(exps) for exps in self.terms}
        return len(degrees) <= 1

    def has_positive_coefficients(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def _sum_abs(self) -> int:
        return sum(abs(c) for c in self.terms.values())

    def _max_abs(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, self.key()))

    def __repr__(self) -> str:
        return f"Polynomial({self.render()})"

    # ring operations ---------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def mul_monomial(self, exps: Sequence[int], coeff: int = 1) -> "Polynomial":
        shift = tuple(exps)
        return Polynomial(
            self.nvars,
            {tuple(e + s for e, s in zip(t, shift)): c * coeff for t, c in self.terms.items()},
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.nvars)
        if other.is_monomial():
            exps, coeff = next(iter(other.terms.items()))
            return self.mul_monomial(exps, coeff)
        if self.is_monomial():
            exps, coeff = next(iter(self.terms.items()))
            return other.mul_monomial(exps, coeff)
        return _mul_packed(self, other)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient self / divisor, raising InexactDivision if not exact."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial.zero(self.nvars)
        if divisor.is_monomial():
            exps, coeff = next(iter(divisor.terms.items()))
            return self._div_monomial(exps, coeff)
        if self.has_positive_coefficients() and divisor.has_positive_coefficients():
            quotient = _div_packed(self, divisor)
            if quotient is not None:
                return quotient
        return _div_longhand(self, divisor)

    def _div_monomial(self, exps, coeff) -> "Polynomial":
        out = {}
        for t, c in self.terms.items():
            if c % coeff:
                raise InexactDivision(f"coefficient {c} not divisible by {coeff}")
            shifted = tuple(e - s for e, s in zip(t, exps))
            if any(e < 0 for e in shifted):
                raise InexactDivision("monomial divisor does not divide every term")
            out[shifted] = c // coeff
        return Polynomial(self.nvars, out)

    def evaluate(self, values: Sequence) -> object:
        """Exact evaluation; use Fractions for rational points."""
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(1, self.nvars + 1)]
        ordered = sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)
        pieces = []
        for exps, coeff in ordered:
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += sign + body
        return text

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError("polynomials over different variable counts")


# packing internals -----------------------------------------------------------


def _choose_drop(a: Polynomial, b: Polynomial) -> int | None:
    """Variable index to drop when both operands are homogeneous."""
    if a.nvars < 2 or not (a.is_homogeneous() and b.is_homogeneous()):
        return None
    extents = [x + y for x, y in zip(a.max_degrees(), b.max_degrees())]
    return max(range(len(extents)), key=lambda i: extents[i])


def _pack(terms: Iterable[tuple[tuple[int, ...], int]], strides, slot_bytes, drop) -> int:
    size = 0
    chunks: list[tuple[int, int]] = []
    for exps, coeff in terms:
        idx = 0
        s = 0
        for i, e in enumerate(exps):
            if i == drop:
                continue
            idx += e * strides[s]
            s += 1
        chunks.append((idx, coeff))
        if idx >= size:
            size = idx + 1
    buf = bytearray(size * slot_bytes)
    for idx, coeff in chunks:
        off = idx * slot_bytes
        buf[off : off + slot_bytes] = coeff.to_bytes(slot_bytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(value: int, slot_bytes, extents, drop, nvars, degree) -> dict:
    """Inverse of _pack; ``degree`` restores the dropped exponent (or None)."""
    out: dict[tuple[int, ...], int] = {}
    if value == 0:
        return out
    data = value.to_bytes((value.bit_length() + 7) // 8 + slot_bytes, "little")
    nslots = len(data) // slot_bytes
    for idx in range(nslots):
        chunk = data[idx * slot_bytes : (idx + 1) * slot_bytes]
        coeff = int.from_bytes(chunk, "little")
        if not coeff:
            continue
        exps = []
        rem = idx
        for extent in extents:
            rem, e = divmod(rem, extent)
            exps.append(e)
        if rem:
            raise InexactDivision("packed index outside the exponent box")
        if drop is not None:
            missing = degree - sum(exps)
            if missing < 0:
                raise InexactDivision("degree bookkeeping failed during unpacking")
            exps.insert(drop, missing)
        out[tuple(exps)] = coeff
    return out


def _split_signs(poly: Polynomial):
    pos = [(e, c) for e, c in poly.terms.items() if c > 0]
    neg = [(e, -c) for e, c in poly.terms.items() if c < 0]
    return pos, neg


def _mul_packed(a: Polynomial, b: Polynomial) -> Polynomial:
    nvars = a.nvars
    drop = _choose_drop(a, b)
    extents = [
        x + y + 1
        for i, (x, y) in enumerate(zip(a.max_degrees(), b.max_degrees()))
        if i != drop
    ]
    strides = []
    acc = 1
    for extent in extents:
        strides.append(acc)
        acc *= extent
    bound = min(a._sum_abs() * b._max_abs(), a._max_abs() * b._sum_abs())
    slot_bytes = (bound.bit_length() + 8) // 8
    if acc * slot_bytes > _PACK_BYTE_LIMIT:
        return _mul_dict(a, b)
    degree = a.total_degree() + b.total_degree() if drop is not None else None

    a_pos, a_neg = _split_signs(a)
    b_pos, b_neg = _split_signs(b)
    packed = {}
    for tag, part in (("ap", a_pos), ("an", a_neg), ("bp", b_pos), ("bn", b_neg)):
        packed[tag] = _pack(part, strides, slot_bytes, drop) if part else 0

    plus = packed["ap"] * packed["bp"] + packed["an"] * packed["bn"]
    minus = packed["ap"] * packed["bn"] + packed["an"] * packed["bp"]

    terms = _unpack(plus, slot_bytes, extents, drop, nvars, degree)
    for exps, coeff in _unpack(minus, slot_bytes, extents, drop, nvars, degree).items():
        new = terms.get(exps, 0) - coeff
        if new:
            terms[exps] = new
        else:
            terms.pop(exps, None)
    return Polynomial(nvars, terms)


def _mul_dict(a: Polynomial, b: Polynomial) -> Polynomial:
    out: dict[tuple[int, ...], int] = {}
    get = out.get
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            new = get(key, 0) + ca * cb
            if new:
                out[key] = new
            else:
                del out[key]
    return Polynomial(a.nvars, out)


def _div_packed(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Positive-coefficient fast path; None means fall back to long division."""
    fmax = f.max_degrees()
    gmax = g.max_degrees()
    if any(ge > fe for fe, ge in zip(fmax, gmax)):
        raise InexactDivision("divisor exceeds dividend in some variable")
    drop = _choose_drop(f, g)
    extents = [e + 1 for i, e in enumerate(fmax) if i != drop]
    strides = []
    acc = 1
    for extent in extents:
        strides.append(acc)
        acc *= extent
    bound = max(f._sum_abs(), g._max_abs())
    slot_bytes = (bound.bit_length() + 8) // 8
    if acc * slot_bytes > _PACK_BYTE_LIMIT:
        return None
    packed_f = _pack(f.terms.items(), strides, slot_bytes, drop)
    packed_g = _pack(g.terms.items(), strides, slot_bytes, drop)
    quotient, remainder = divmod(packed_f, packed_g)
    if remainder:
        raise InexactDivision("division leaves a nonzero remainder")
    degree = f.total_degree() - g.total_degree() if drop is not None else None
    if degree is not None and degree < 0:
        raise InexactDivision("quotient degree would be negative")
    terms = _unpack(quotient, slot_bytes, extents, drop, f.nvars, degree)
    q = Polynomial(f.nvars, terms)
    # integer equality F = Q*G only certifies the polynomial identity when
    # the convolution of q and g cannot overflow a slot
    limit = 1 << (8 * slot_bytes)
    if min(q._sum_abs() * g._max_abs(), q._max_abs() * g._sum_abs()) < limit:
        return q
    if q * g == f:
        return q
    raise InexactDivision("packed quotient failed verification")


def _div_longhand(f: Polynomial, g: Polynomial) -> Polynomial:
    def grlex(exps):
        return (sum(exps), exps)

    lead_g = max(g.terms, key=grlex)
    coeff_g = g.terms[lead_g]
    remainder = dict(f.terms)
    quotient: dict[tuple[int, ...], int] = {}
    while remainder:
        lead_r = max(remainder, key=grlex)
        coeff_r = remainder[lead_r]
        exps = tuple(a - b for a, b in zip(lead_r, lead_g))
        if any(e < 0 for e in exps) or coeff_r % coeff_g:
            raise InexactDivision("division leaves a nonzero remainder")
        c = coeff_r // coeff_g
        quotient[exps] = c
        for eg, cg in g.terms.items():
            key = tuple(a + b for a, b in zip(exps, eg))
            new = remainder.get(key, 0) - c * cg
            if new:
                remainder[key] = new
            else:
                remainder.pop(key, None)
    return Polynomial(f.nvars, quotient)


# Laurent fractions -----------------------------------------------------------


class LaurentFraction:
    """A polynomial over a monomial denominator, always in reduced form."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Sequence[int]):
        den = list(denominator)
        if len(den) != numerator.nvars or any(e < 0 for e in den):
            raise ValueError(f"bad denominator exponents {denominator}")
        if numerator.is_zero():
            self.numerator = numerator
            self.denominator = (0,) * numerator.nvars
            return
        content = numerator.content_exponents()
        cancel = tuple(min(c, d) for c, d in zip(content, den))
        if any(cancel):
            numerator = numerator._div_monomial(cancel, 1)
            den = [d - c for d, c in zip(den, cancel)]
        self.numerator = numerator
        self.denominator = tuple(den)

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "LaurentFraction":
        return cls(poly, (0,) * poly.nvars)

    @classmethod
    def unit_variable(cls, index: int, nvars: int) -> "LaurentFraction":
        return cls.from_polynomial(Polynomial.variable(index, nvars))

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_reduced(self) -> bool:
        content = self.numerator.content_exponents()
        return all(d == 0 or c == 0 for c, d in zip(content, self.denominator))

    def has_monomial_denominator(self) -> bool:
        """True by representation; kept as an explicit checkable property."""
        return all(e >= 0 for e in self.denominator)

    def __mul__(self, other: "LaurentFraction") -> "LaurentFraction":
        return LaurentFraction(
            self.numerator * other.numerator,
            tuple(a + b for a, b in zip(self.denominator, other.denominator)),
        )

    def __add__(self, other: "LaurentFraction") -> "LaurentFraction":
        den = tuple(max(a, b) for a, b in zip(self.denominator, other.denominator))
        left = self.numerator.mul_monomial(tuple(d - a for d, a in zip(den, self.denominator)))
        right = other.numerator.mul_monomial(tuple(d - b for d, b in zip(den, other.denominator)))
        return LaurentFraction(left + right, den)

    def __pow__(self, n: int) -> "LaurentFraction":
        if n < 0:
            raise ValueError("negative powers are not defined for fractions in general")
        out = LaurentFraction.from_polynomial(Polynomial.constant(self.nvars, 1))
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def divide_exact(self, other: "LaurentFraction") -> "LaurentFraction":
        """Quotient self / other, defined when the result is again a Laurent
        fraction with monomial denominator; otherwise NonLaurentResult."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero fraction")
        content = other.numerator.content_exponents()
        stripped = other.numerator._div_monomial(content, 1)
        try:
            quotient = self.numerator.exact_div(stripped)
        except InexactDivision as exc:
            raise NonLaurentResult(
                f"exchange numerator is not divisible: {exc}"
            ) from exc
        net = [
            s + c - d
            for s, c, d in zip(self.denominator, content, other.denominator)
        ]
        lift = tuple(max(-e, 0) for e in net)
        den = tuple(max(e, 0) for e in net)
        return LaurentFraction(quotient.mul_monomial(lift), den)

    def key(self) -> tuple:
        return (self.denominator, self.numerator.key())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentFraction)
            and self.denominator == other.denominator
            and self.numerator == other.numerator
        )

    def __hash__(self) -> int:
        return hash((self.denominator, self.numerator))

    def evaluate(self, values: Sequence) -> Fraction:
        num = self.numerator.evaluate(values)
        den = 1
        for v, e in zip(values, self.denominator):
            den *= v**e
        return Fraction(num, den) if not isinstance(num, Fraction) else num / den

    def render(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"x{i}" for i in range(1, self.nvars + 1)]
        num = self.numerator.render(names)
        factors = []
        for name, e in zip(names, self.denominator):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            return num
        den = "*".join(factors)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        if len(factors) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return f"LaurentFraction({self.render()})"
