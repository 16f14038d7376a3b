#!/usr/bin/env python3
"""Writes the golden fixtures from hand-typed formulas.

Expressions are sums of products of factors. A factor is a generator or the
differential of one. Each term is emitted with its functions first, in the
order they were typed, and its differentials after, in the order they were
typed; the Rust parser canonicalizes both words. Moving a function left past
a differential costs a sign only when both are odd.

Run from this directory: python3 transcribe.py
"""

import json
from fractions import Fraction

ODD = {"η", "η♦", "ξ-", "ξ+"}


class Expr:
    def __init__(self, terms=None):
        # list of (complex coefficient as (re, im) Fractions, factor word)
        self.terms = terms or []

    @staticmethod
    def gen(name):
        return Expr([((Fraction(1), Fraction(0)), [(name, False)])])

    @staticmethod
    def d(name):
        return Expr([((Fraction(1), Fraction(0)), [(name, True)])])

    @staticmethod
    def const(re, im=0):
        return Expr([((Fraction(re), Fraction(im)), [])])

    def __add__(self, o):
        return Expr(self.terms + o.terms)

    def __neg__(self):
        return self * Expr.const(-1)

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, Expr):
            o = Expr.const(o)
        out = []
        for (a, b), w in self.terms:
            for (c, e), v in o.terms:
                out.append(((a * c - b * e, a * e + b * c), w + v))
        return Expr(out)

    __rmul__ = __mul__


def split(word):
    """Moves functions left of differentials; returns (sign, funcs, diffs)."""
    sign = 1
    funcs, diffs = [], []
    for name, is_diff in word:
        if is_diff:
            diffs.append(name)
        else:
            if name in ODD:
                sign *= (-1) ** sum(1 for x in diffs if x in ODD)
            funcs.append(name)
    return sign, funcs, diffs


def integer(q):
    return int(q)


def scalar(re, im, pi=0):
    return {
        "re": [integer(re.numerator), integer(re.denominator)],
        "im": [integer(im.numerator), integer(im.denominator)],
        "radical": 1,
        "pi": pi,
    }


def element_terms(pairs, pi=0):
    out = []
    for (re, im), funcs in pairs:
        even, odd = {}, []
        for f in funcs:
            if f in ODD:
                odd.append(f)
            else:
                even[f] = even.get(f, 0) + 1
        out.append({"coeff": scalar(re, im, pi), "even": even, "odd": odd})
    return out


def element(e):
    pairs = []
    for c, word in e.terms:
        sign, funcs, diffs = split(word)
        assert not diffs, "function expected"
        pairs.append(((c[0] * sign, c[1] * sign), funcs))
    return element_terms(pairs)


def form(e, pi=0):
    out = []
    for (re, im), word in e.terms:
        sign, funcs, diffs = split(word)
        out.append({
            "coeff": element_terms([((re * sign, im * sign), funcs)], pi),
            "wedge": ["d" + x for x in diffs],
        })
    return out


def shape(even, odd):
    return {"even": even, "odd": odd, "order": "odd_first"}


def matrix(rows):
    return {
        "rows": shape(2, 1),
        "cols": shape(2, 1),
        "parity": "even",
        "entries": [[element(x) for x in row] for row in rows],
    }


x0, x1, x2 = Expr.gen("x0"), Expr.gen("x1"), Expr.gen("x2")
xm, xp = Expr.gen("ξ-"), Expr.gen("ξ+")
one = Expr.const(1)
i = Expr.const(0, 1)
half = Fraction(1, 2)
z_plus = x1 + i * x2
z_minus = x1 - i * x2

p_minus_1 = [
    [2 * xp * xm, z_plus * xm - (one + x0) * xp, -z_minus * xp + (one - x0) * xm],
    [-z_minus * xp - (one + x0) * xm, one + x0 + xp * xm, z_minus],
    [-z_plus * xm - (one - x0) * xp, z_plus, one - x0 + xp * xm],
]
p_plus_1 = [
    [2 * xp * xm, -z_minus * xp - (one + x0) * xm, -z_plus * xm - (one - x0) * xp],
    [-z_plus * xm + (one + x0) * xp, one + x0 + xp * xm, z_plus],
    [z_minus * xp - (one - x0) * xm, z_minus, one - x0 + xp * xm],
]
p_minus_1 = [[half * x for x in row] for row in p_minus_1]
p_plus_1 = [[half * x for x in row] for row in p_plus_1]

a, ad, b, bd = (Expr.gen(n) for n in ("a", "a♦", "b", "b♦"))
eta, etad = Expr.gen("η"), Expr.gen("η♦")
da, dad, db, dbd = (Expr.d(n) for n in ("a", "a♦", "b", "b♦"))
deta, detad = Expr.d("η"), Expr.d("η♦")

connection = (one - Fraction(1, 4) * eta * etad) * (a * dad + b * dbd) \
    + Fraction(1, 8) * (eta * detad + etad * deta)

# d(aη♦) d(ηa♦) and d(bη♦) d(ηb♦) by the Leibniz rule
d_a_etad = da * etad + a * detad
d_eta_ad = deta * ad + eta * dad
d_b_etad = db * etad + b * detad
d_eta_bd = deta * bd + eta * dbd
bracket = da * dad + db * dbd \
    + Fraction(1, 4) * d_a_etad * d_eta_ad + Fraction(1, 4) * d_b_etad * d_eta_bd
# −1/(2πi) = i/(2π): the 1/π goes into the π exponent of every coefficient
chern = Expr.const(0, half) * bracket

fixtures = {
    "p_minus_1.json": {
        "description": "charge +1 projector p₋₁ in base coordinates x0, x1, x2, ξ-, ξ+",
        "coordinates": "base",
        "value": matrix(p_minus_1),
    },
    "p_plus_1.json": {
        "description": "charge −1 projector p₊₁, the supertranspose of p₋₁, in base coordinates",
        "coordinates": "base",
        "value": matrix(p_plus_1),
    },
    "connection_minus_1.json": {
        "description": "connection form A₋₁ = ⟨ψ₋₁|dψ₋₁⟩ in group generators",
        "coordinates": "group",
        "value": form(connection),
    },
    "chern_form_minus_1.json": {
        "description": "closed first Chern form −(1/2πi)⟨dψ₋₁|dψ₋₁⟩ in group generators",
        "coordinates": "group",
        "value": form(chern, pi=-1),
    },
}

for name, body in fixtures.items():
    with open(name, "w", encoding="utf-8") as f:
        json.dump(body, f, ensure_ascii=False, indent=1)
        f.write("\n")
