"""Exact coefficient fields: GF(p), GF(p^k) and the rationals.

A field object supplies arithmetic on plain hashable values: ints in
range(p) for prime fields, coefficient tuples for extensions, Fraction
for the rationals.  Matrices store bare values and dispatch through
their field, which keeps inner loops cheap and equality entrywise.

Every field here is perfect, which the radical algorithms rely on.
"""

from fractions import Fraction

from .errors import FieldError

PRIME_LIMIT = 97
DEGREE_LIMIT = 8


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over a field: coefficient lists, low degree first, trimmed


def poly_trim(F, cs):
    cs = list(cs)
    while cs and cs[-1] == F.zero:
        cs.pop()
    return cs


def poly_add(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero
        y = b[i] if i < len(b) else F.zero
        out.append(F.add(x, y))
    return poly_trim(F, out)


def poly_scale(F, c, a):
    if c == F.zero:
        return []
    return [F.mul(c, x) for x in a]


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            if y == F.zero:
                continue
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = F.inv(b[-1])
    q = [F.zero] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = F.mul(a[-1], inv_lead)
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = F.sub(a[d + i], F.mul(c, y))
        a = poly_trim(F, a)
    return poly_trim(F, q), a


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    if not a:
        return []
    return poly_scale(F, F.inv(a[-1]), a)


def poly_gcd(F, a, b):
    a, b = poly_trim(F, a), poly_trim(F, b)
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_xgcd(F, a, b):
    """Monic g with u*a + v*b = g."""
    r0, r1 = poly_trim(F, a), poly_trim(F, b)
    u0, u1 = [F.one], []
    v0, v1 = [], [F.one]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_add(F, u0, poly_scale(F, F.neg(F.one), poly_mul(F, q, u1)))
        v0, v1 = v1, poly_add(F, v0, poly_scale(F, F.neg(F.one), poly_mul(F, q, v1)))
    if not r0:
        return [], u0, v0
    c = F.inv(r0[-1])
    return poly_scale(F, c, r0), poly_scale(F, c, u0), poly_scale(F, c, v0)


def poly_eval(F, cs, x):
    acc = F.zero
    for c in reversed(cs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_powmod(F, a, e, m):
    result = [F.one]
    base = poly_mod(F, a, m)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), m)
        base = poly_mod(F, poly_mul(F, base, base), m)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(F, f):
    """Irreducibility over a prime field GF(p), deterministic.

    Rabin's test: x^(p^k) = x mod f, and gcd(x^(p^(k/d)) - x, f) = 1 for
    every prime divisor d of k.
    """
    f = poly_trim(F, f)
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    p = F.char
    x = [F.zero, F.one]
    for d in _prime_factors(k):
        e = k // d
        xp = poly_powmod(F, x, p ** e, f)
        g = poly_gcd(F, poly_add(F, xp, poly_scale(F, F.neg(F.one), x)), f)
        if len(g) - 1 != 0:
            return False
    xp = poly_powmod(F, x, p ** k, f)
    return poly_trim(F, poly_add(F, xp, poly_scale(F, F.neg(F.one), x))) == []


def poly_derivative(F, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        term = F.zero
        for _ in range(i):
            term = F.add(term, c)
        out.append(term)
    return poly_trim(F, out)


def poly_pth_root(F, a):
    """p-th root of a polynomial of the form v(x^p), over a perfect field of char p."""
    p = F.char
    out = []
    for i in range(0, len(a), p):
        c = a[i]
        # coefficients between the p-strides must vanish for a root to exist
        out.append(F.frobenius_inverse(c))
    return poly_trim(F, out)


def _primary_split(F, m, s):
    """Split m = g*h with g the part of m whose irreducible factors divide s.

    s must be a nontrivial proper divisor-support: a squarefree polynomial
    dividing the squarefree part of m, with at least one factor of m outside
    it.  Returns (g, h) coprime, or None if the split is trivial.
    """
    n = len(m) - 1
    spow = poly_powmod(F, s, n, m)
    g = poly_gcd(F, m, spow)
    if len(g) - 1 == 0 or len(g) == len(m):
        return None
    h, rem = poly_divmod(F, m, g)
    assert not rem
    return g, h


def poly_coprime_split(F, m):
    """A factorization m = g*h with gcd(g,h) = 1 and both factors nontrivial.

    Deterministic and complete over finite fields: returns None exactly when
    m is a power of a single irreducible.  Over the rationals only rational
    roots are extracted, so None may also mean "no split found"; callers
    must treat that case conservatively.
    """
    m = poly_monic(F, poly_trim(F, m))
    n = len(m) - 1
    if n < 2:
        return None
    if F.char == 0:
        return _rational_coprime_split(F, m)
    p = F.char
    d = poly_derivative(F, m)
    if not d:
        # derivative zero in char p forces m = v(x^p); v has a p-th root by perfectness
        root = poly_pth_root(F, m)
        sub = poly_coprime_split(F, root)
        if sub is None:
            return None
        g, h = sub
        gp = g
        hp = h
        for _ in range(p - 1):
            gp = poly_mul(F, gp, g)
            hp = poly_mul(F, hp, h)
        return poly_monic(F, gp), poly_monic(F, hp)
    u, _ = poly_divmod(F, m, poly_gcd(F, m, d))  # squarefree, possibly missing p-fold factors
    du = len(u) - 1
    if du >= 1 and du < n:
        # try the squarefree support itself first: catches m with p-fold factors
        split = _primary_split(F, m, u)
        if split is not None:
            return split
    if du < 2:
        return None
    # distinct-degree stage on u
    q = F.order
    x = [F.zero, F.one]
    for deg in range(1, du):
        xq = poly_powmod(F, x, q ** deg, u)
        gd = poly_gcd(F, poly_add(F, xq, poly_scale(F, F.neg(F.one), x)), u)
        dd = len(gd) - 1
        if 0 < dd < du:
            split = _primary_split(F, m, gd)
            if split is not None:
                return split
        if dd == du:
            # all factors of u share degree `deg` (deg < du, so at least two)
            return _equal_degree_split(F, m, u, deg)
    # u irreducible: m = u^e * (p-fold part); primary split on u if proper
    return _primary_split(F, m, u)


def _equal_degree_split(F, m, u, d):
    """Berlekamp-trace splitting of u (squarefree, all factors of degree d).

    Scans GF(p)-trace functions of basis elements of F[x]/u; complete for
    small characteristic (p is bounded by PRIME_LIMIT here).
    """
    p = F.char
    k = F.degree
    du = len(u) - 1
    gamma_basis = [F.one]
    if k > 1:
        # power basis of GF(p^k) over GF(p)
        gamma_basis = []
        g = (0, 1) + (0,) * (k - 2)
        acc = F.one
        for _ in range(k):
            gamma_basis.append(acc)
            acc = F.mul(acc, g)
    for j in range(du):
        xj = [F.zero] * j + [F.one]
        for gamma in gamma_basis:
            beta = poly_mod(F, poly_scale(F, gamma, xj), u)
            # GF(p)-trace of beta inside each degree-d factor field
            w = []
            acc = beta
            for _ in range(k * d):
                w = poly_add(F, w, acc)
                acc = _poly_pow_p(F, acc, u)
            for c in range(p):
                ce = F.from_int(c)
                g = poly_gcd(F, poly_add(F, w, [F.neg(ce)]), u)
                dg = len(g) - 1
                if 0 < dg < du:
                    split = _primary_split(F, m, g)
                    if split is not None:
                        return split
    return None


def _poly_pow_p(F, a, modulus):
    return poly_powmod(F, a, F.char, modulus)


def _int_divisors(n):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _rational_coprime_split(F, m):
    """Extract a rational linear factor of m and split off its primary part."""
    # clear denominators to an integer polynomial
    den = 1
    for c in m:
        den = den * Fraction(c).denominator // _gcd_int(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in m]
    # strip content
    g = 0
    for c in ints:
        g = _gcd_int(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    lead = ints[-1]
    const = ints[0]
    candidates = [Fraction(0)]
    if const != 0:
        for r in _int_divisors(const):
            for s in _int_divisors(lead):
                candidates.extend((Fraction(r, s), Fraction(-r, s)))
    root = None
    for cand in candidates:
        if poly_eval(F, m, cand) == 0:
            root = cand
            break
    if root is None:
        return None
    lin = [F.neg(root), F.one]
    rest = m
    e = 0
    while True:
        quo, rem = poly_divmod(F, rest, lin)
        if rem:
            break
        rest = quo
        e += 1
    if len(rest) - 1 == 0:
        return None  # m = (x - root)^n
    primary = [F.one]
    for _ in range(e):
        primary = poly_mul(F, primary, lin)
    return poly_monic(F, primary), poly_monic(F, rest)


def _gcd_int(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def default_modulus(p, k):
    """Least monic irreducible of degree k over GF(p).

    Tails are ordered by their base-p value, so the chosen modulus is the
    lexicographically least monic polynomial that is irreducible: x^2+x+1
    for GF(4), x^3+x+1 for GF(8), x^2+1 for GF(9).
    """
    base = PrimeField(p)
    for t in range(p ** k):
        tail = []
        v = t
        for _ in range(k):
            tail.append(v % p)
            v //= p
        f = tail + [1]
        if poly_is_irreducible(base, f):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


# ---------------------------------------------------------------------------
# fields


class PrimeField:
    """GF(p) with elements the ints 0..p-1."""

    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p > PRIME_LIMIT:
            raise FieldError(f"p = {p} exceeds the desk-scale limit {PRIME_LIMIT}")
        self.p = p
        self.char = p
        self.order = p
        self.degree = 1
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.p)

    def frobenius(self, a):
        return a

    def frobenius_inverse(self, a):
        return a

    def format(self, a):
        return str(a)

    def parse(self, token):
        try:
            return int(token) % self.p
        except ValueError:
            raise FieldError(f"bad GF({self.p}) element {token!r}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtensionField:
    """GF(p^k), elements are k-tuples of ints (coefficients, low degree first)."""

    kind = "prime-power"

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p > PRIME_LIMIT:
            raise FieldError(f"p = {p} exceeds the desk-scale limit {PRIME_LIMIT}")
        if k < 2 or k > DEGREE_LIMIT:
            raise FieldError(f"extension degree {k} outside 2..{DEGREE_LIMIT}")
        self.p = p
        self.k = k
        self.char = p
        self.order = p ** k
        self.degree = k
        base = PrimeField(p)
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not poly_is_irreducible(base, list(modulus)):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.base = base
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        # x^(k+i) reduced mod the modulus, for i = 0..k-2
        red = []
        cur = [(-modulus[j]) % p for j in range(k)]
        red.append(tuple(cur))
        for _ in range(k - 2):
            nxt = [0] * k
            for j, c in enumerate(cur):
                if c == 0:
                    continue
                if j + 1 < k:
                    nxt[j + 1] = (nxt[j + 1] + c) % p
                else:
                    for t in range(k):
                        nxt[t] = (nxt[t] + c * red[0][t]) % p
            red.append(tuple(nxt))
            cur = nxt
        self._red = red
        self._inv_cache = {}

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for i in range(k, 2 * k - 1):
            c = conv[i] % p
            if c == 0:
                continue
            row = self._red[i - k]
            for t in range(k):
                out[t] = (out[t] + c * row[t]) % p
        return tuple(out)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        g, u, _ = poly_xgcd(self.base, poly_trim(self.base, list(a)), list(self.modulus))
        assert len(g) == 1
        c = self.base.inv(g[0])
        u = [self.base.mul(c, x) for x in u]
        u = (u + [0] * self.k)[: self.k]
        result = tuple(u)
        self._inv_cache[a] = result
        return result

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def elements(self):
        p, k = self.p, self.k
        for n in range(self.order):
            cs = []
            for _ in range(k):
                cs.append(n % p)
                n //= p
            yield tuple(cs)

    def frobenius(self, a):
        result = self.one
        base = a
        e = self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def frobenius_inverse(self, a):
        # frobenius has order k on GF(p^k)
        for _ in range(self.k - 1):
            a = self.frobenius(a)
        return a

    def format(self, a):
        return ",".join(str(c) for c in a)

    def parse(self, token):
        try:
            cs = [int(t) % self.p for t in token.split(",")]
        except ValueError:
            raise FieldError(f"bad GF({self.order}) element {token!r}")
        if len(cs) > self.k:
            raise FieldError(f"element {token!r} has more than {self.k} coefficients")
        cs += [0] * (self.k - len(cs))
        return tuple(cs)

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("GF", self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"


class RationalField:
    """The rationals, elements are Fraction (canonical lowest terms)."""

    kind = "rationals"

    def __init__(self):
        self.char = 0
        self.order = None
        self.degree = 1
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def from_int(self, n):
        return Fraction(n)

    def elements(self):
        raise FieldError("cannot enumerate the rationals")

    def frobenius(self, a):
        raise FieldError("no Frobenius in characteristic 0")

    frobenius_inverse = frobenius

    def format(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def parse(self, token):
        try:
            if "/" in token:
                num, den = token.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(token))
        except (ValueError, ZeroDivisionError):
            raise FieldError(f"bad rational {token!r}")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def GF(q, k=None, modulus=None):
    """GF(q) for a prime power q, or GF(p, k) when k is given explicitly."""
    if k is not None:
        p = q
    else:
        p = None
        n = q
        d = 2
        while d * d <= n:
            if n % d == 0:
                p = d
                break
            d += 1
        if p is None:
            p = n
        k = 0
        while n > 1:
            if n % p:
                raise FieldError(f"{q} is not a prime power")
            n //= p
            k += 1
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, modulus)


def parse_field(text):
    text = text.strip()
    if text in ("QQ", "Q"):
        return QQ
    if text.startswith("GF(") and text.endswith(")"):
        inner = text[3:-1]
        if "^" in inner:
            p, k = inner.split("^")
            return GF(int(p), int(k))
        return GF(int(inner))
    raise FieldError(f"unknown field spec {text!r}")
