#!/usr/bin/env python3
"""Regenerate the catalog data files under data/.

Lattices are written as glue files: the root system followed by glue vectors
in coordinates relative to the concatenated simple-root basis. Glue groups
are found by a backtracking search over the discriminant group, keeping only
cosets of minimal norm >= 3 so no roots or unit vectors are added.

Codes are written as generator matrices. The five glued codes are found the
same way over GF(2), keeping glue cosets of minimal weight >= 6.

The shorter Leech lattice is built as the norm-1 complement of the odd
neighbour of the Leech lattice at a norm-4 vector and written as a Gram file.

The C++ test suite validates every file produced here; this script is only
needed to rebuild them.
"""

import argparse
import itertools
import math
import pathlib
from fractions import Fraction

# ---------------------------------------------------------------- root systems


def cartan(kind, m):
    c = [[0] * m for _ in range(m)]
    for i in range(m):
        c[i][i] = 2
    edges = []
    if kind == "A":
        edges = [(i, i + 1) for i in range(m - 1)]
    elif kind == "D":
        edges = [(i, i + 1) for i in range(m - 2)] + [(m - 3, m - 1)]
    elif kind == "E":
        # Bourbaki: 1-3-4-5-...-m chain, 2 attached to 4
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, m - 1)]
    for a, b in edges:
        c[a][b] = c[b][a] = -1
    return c


def inverse(mat):
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class Component:
    """Discriminant group of one root lattice, via minimal class representatives."""

    def __init__(self, name):
        self.name = name
        kind, m = name[0], int(name[1:])
        self.rank = m
        cinv = inverse(cartan(kind, m))
        if kind == "A":
            reps = [None] + list(range(m))
        elif kind == "D":
            reps = [None, 0, m - 1, m - 2]
        elif name == "E6":
            reps = [None, 0, 5]
        elif name == "E7":
            reps = [None, 6]
        else:
            reps = [None]
        self.reps = [[Fraction(0)] * m if r is None else cinv[r] for r in reps]
        self.cinv = cinv
        self.gram = cartan(kind, m)
        k = len(self.reps)
        self.add = [[self._classify([x + y for x, y in zip(self.reps[a], self.reps[b])])
                     for b in range(k)] for a in range(k)]

    def _classify(self, v):
        for i, r in enumerate(self.reps):
            if all((x - y).denominator == 1 for x, y in zip(v, r)):
                return i
        raise ValueError("vector outside dual lattice")

    def dot(self, a, b):
        u, v = self.reps[a], self.reps[b]
        return sum(u[i] * self.gram[i][j] * v[j]
                   for i in range(self.rank) for j in range(self.rank))

    def order(self):
        return len(self.reps)


def glue_search(components, min_norm=3):
    orders = [c.order() for c in components]
    total = math.prod(orders)
    target = math.isqrt(total)
    assert target * target == total
    elements = list(itertools.product(*[range(o) for o in orders]))
    zero = tuple(0 for _ in orders)

    def add(g, h):
        return tuple(c.add[a][b] for c, a, b in zip(components, g, h))

    def dot(g, h):
        return sum(c.dot(a, b) for c, a, b in zip(components, g, h))

    def admissible(g):
        nrm = dot(g, g)
        return g == zero or (nrm.denominator == 1 and nrm >= min_norm)

    cands = [g for g in elements if g != zero and admissible(g)]

    def span(group, g):
        out = set(group)
        frontier = list(group)
        while frontier:
            h = add(frontier.pop(), g)
            if h not in out:
                out.add(h)
                frontier.append(h)
        return out

    def search(group, gens, start):
        if len(group) == target:
            return gens
        for idx in range(start, len(cands)):
            g = cands[idx]
            if g in group:
                continue
            if any(dot(g, h).denominator != 1 for h in gens):
                continue
            new = span(group, g)
            if len(new) * len(new) > total:
                continue
            if not all(admissible(x) for x in new):
                continue
            res = search(new, gens + [g], idx + 1)
            if res is not None:
                return res
        return None

    gens = search({zero}, [], 0)
    if gens is None:
        raise RuntimeError("no glue found for " + " ".join(c.name for c in components))
    return gens


def glue_vector(components, g):
    out = []
    for c, a in zip(components, g):
        out.extend(c.reps[a])
    return out


def frac_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------------ binary codes


def golay24():
    poly = [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1]  # 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11
    rows = []
    for s in range(12):
        w = [0] * 23
        for i, b in enumerate(poly):
            w[(s + i) % 23] ^= b
        rows.append(w + [sum(w) % 2])
    return rows


def span_words(rows):
    words = {tuple([0] * len(rows[0]))}
    for r in rows:
        words |= {tuple(a ^ b for a, b in zip(w, r)) for w in words}
    return words


def row_basis(words):
    basis = []
    pivots = []
    for w in words:
        w = list(w)
        for b, p in zip(basis, pivots):
            if w[p]:
                w = [x ^ y for x, y in zip(w, b)]
        if any(w):
            p = w.index(1)
            for i, b in enumerate(basis):
                if b[p]:
                    basis[i] = [x ^ y for x, y in zip(b, w)]
            basis.append(w)
            pivots.append(p)
    return basis


def golay22():
    words = [w[:22] for w in span_words(golay24()) if w[22] == w[23]]
    return row_basis(words)


def d_code(n):
    rows = []
    for i in range(n // 2 - 1):
        w = [0] * n
        for j in range(2 * i, 2 * i + 4):
            w[j] = 1
        rows.append(w)
    return rows


def hamming8():
    return [[1, 1, 1, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0, 0],
            [0, 0, 0, 0, 1, 1, 1, 1], [0, 1, 0, 1, 0, 1, 0, 1]]


def e7_code():
    words = [w[:7] for w in span_words(hamming8()) if w[7] == 0]
    return row_basis(words)


def direct_sum_codes(parts):
    n = sum(len(p[0]) for p in parts)
    rows, off = [], 0
    for p in parts:
        m = len(p[0])
        rows += [[0] * off + r + [0] * (n - off - m) for r in p]
        off += m
    return rows


def dual_basis(rows, n):
    # kernel of rows over GF(2)
    basis = []
    mat = [list(r) for r in row_basis([tuple(r) for r in rows])]
    pivots = [r.index(1) for r in mat]
    free = [j for j in range(n) if j not in pivots]
    for f in free:
        v = [0] * n
        v[f] = 1
        for r, p in zip(mat, pivots):
            v[p] = r[f]
        basis.append(v)
    return basis


def code_glue(parts, min_weight=6):
    c0 = direct_sum_codes(parts)
    n = len(c0[0])
    c0_words = span_words(c0)
    dual = dual_basis(c0, n)
    # quotient representatives: reduce dual basis against c0
    c0b = row_basis([tuple(r) for r in c0])
    quo = []
    cur = list(c0b)
    for v in dual:
        test = row_basis([tuple(r) for r in cur + [v]])
        if len(test) > len(cur):
            quo.append(v)
            cur = test
    need = n // 2 - len(c0b)

    def xor(a, b):
        return tuple(x ^ y for x, y in zip(a, b))

    def coset_min(w):
        return min(sum(xor(w, c)) for c in c0_words)

    elems = {}
    for bits in itertools.product([0, 1], repeat=len(quo)):
        w = tuple([0] * n)
        for b, q in zip(bits, quo):
            if b:
                w = xor(w, q)
        if any(bits):
            elems[bits] = w
    cands = [k for k, w in elems.items() if sum(w) % 2 == 0 and coset_min(w) >= min_weight]

    def bxor(a, b):
        return tuple(x ^ y for x, y in zip(a, b))

    def ortho(a, b):
        return sum(x & y for x, y in zip(elems[a], elems[b])) % 2 == 0

    zero = tuple([0] * len(quo))

    def search(group, gens, start):
        if len(gens) == need:
            return gens
        for idx in range(start, len(cands)):
            g = cands[idx]
            if g in group or not all(ortho(g, h) for h in gens):
                continue
            new = group | {bxor(h, g) for h in group}
            if not all(h == zero or h in cands for h in new):
                continue
            res = search(new, gens + [g], idx + 1)
            if res is not None:
                return res
        return None

    gens = search({zero}, [], 0)
    if gens is None:
        raise RuntimeError("no code glue found")
    return c0b + [list(elems[g]) for g in gens]


# ---------------------------------------------------------------- integer HNF


def hnf(rows):
    a = [list(r) for r in rows]
    m = len(a[0])
    out = []
    r0 = 0
    for col in range(m):
        while True:
            nz = [i for i in range(r0, len(a)) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][col]))
            a[r0], a[piv] = a[piv], a[r0]
            done = True
            for i in range(r0 + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[r0][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[r0])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if any(a[i][col] for i in range(r0, len(a))):
            if a[r0][col] < 0:
                a[r0] = [-x for x in a[r0]]
            r0 += 1
    return [r for r in a[:r0]]


def int_kernel(f):
    """Basis of {c in Z^n : sum c_i f_i = 0} for an integer vector f."""
    n = len(f)
    rows = [[f[i]] + [int(i == j) for j in range(n)] for i in range(n)]
    h = hnf(rows)
    return [r[1:] for r in h if r[0] == 0]


def det(mat):
    n = len(mat)
    a = [[Fraction(x) for x in r] for r in mat]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return d


def shorter_leech():
    n = 24
    gens = [[2 * x for x in c] for c in golay24()]
    for i in range(1, n):
        e = [0] * n
        e[0], e[i] = 4, 4
        gens.append(e)
    e = [0] * n
    e[0], e[1] = 4, -4
    gens.append(e)
    gens.append([-3] + [1] * 23)
    leech = hnf(gens)
    assert len(leech) == 24
    gram = [[sum(x * y for x, y in zip(a, b)) for b in leech] for a in leech]
    assert all(g % 8 == 0 for r in gram for g in r)
    gram = [[g // 8 for g in r] for r in gram]
    assert det(gram) == 1 and all(gram[i][i] % 2 == 0 for i in range(n))
    # x.v with v = (4,4,0,...)/sqrt8 is (x0+x1)/2 in sqrt8 coordinates
    f = [(b[0] + b[1]) // 2 for b in leech]
    i0 = next(i for i, x in enumerate(f) if x % 2)
    sub = [b for b, x in zip(leech, f) if x % 2 == 0]
    sub += [[p + q for p, q in zip(b, leech[i0])] for b, x in zip(leech, f) if x % 2 and b is not leech[i0]]
    sub.append([2 * p for p in leech[i0]])
    sub.append([2, 2] + [0] * 22)
    nb = hnf(sub)
    assert len(nb) == 24
    g = [b[0] + b[1] for b in nb]
    ker = int_kernel(g)
    assert len(ker) == 23
    basis = [[sum(c[i] * nb[i][j] for i in range(24)) for j in range(24)] for c in ker]
    gram = [[sum(x * y for x, y in zip(a, b)) for b in basis] for a in basis]
    assert all(x % 8 == 0 for r in gram for x in r)
    gram = [[x // 8 for x in r] for r in gram]
    assert det(gram) == 1
    return gram


# ---------------------------------------------------------------------- output

LATTICES = {
    "E8": ["E8"],
    "D12": ["D12"],
    "E7^2": ["E7", "E7"],
    "A15": ["A15"],
    "D8^2": ["D8", "D8"],
    "A11E6": ["A11", "E6"],
    "D6^3": ["D6"] * 3,
    "A9^2": ["A9"] * 2,
    "A7^2D5": ["A7", "A7", "D5"],
    "D4^5": ["D4"] * 5,
    "A5^4": ["A5"] * 4,
    "A3^7": ["A3"] * 7,
    "A1^22": ["A1"] * 22,
}

CODES = {
    "d12": lambda: code_glue([d_code(12)]),
    "e7^2": lambda: code_glue([e7_code(), e7_code()]),
    "d8^2": lambda: code_glue([d_code(8), d_code(8)]),
    "d6^3": lambda: code_glue([d_code(6)] * 3),
    "d4^5": lambda: code_glue([d_code(4)] * 5),
    "e8": hamming8,
    "g22": golay22,
    "z": lambda: [[1, 1]],
}


def file_stem(name):
    return name.replace("^", "_").lower()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "lattices").mkdir(parents=True, exist_ok=True)
    (out / "codes").mkdir(parents=True, exist_ok=True)

    for name, kinds in LATTICES.items():
        comps = [Component(k) for k in kinds]
        if name == "A1^22":
            gens = [tuple(w) for w in golay22()]
        else:
            gens = glue_search(comps)
        lines = ["ROOT " + " ".join(kinds)]
        for g in gens:
            lines.append(" ".join(frac_str(x) for x in glue_vector(comps, g)))
        (out / "lattices" / f"{file_stem(name)}.glue").write_text("\n".join(lines) + "\n")
        print(name, "glue generators:", len(gens))

    gram = shorter_leech()
    lines = [str(len(gram))] + [" ".join(str(x) for x in r) for r in gram]
    (out / "lattices" / "o23.gram").write_text("\n".join(lines) + "\n")
    print("O23 gram written")

    for name, make in CODES.items():
        rows = make()
        n = len(rows[0])
        lines = [f"{n} {len(rows)}"] + ["".join(str(b) for b in r) for r in rows]
        (out / "codes" / f"{file_stem(name)}.gen").write_text("\n".join(lines) + "\n")
        print(name, "length", n, "dim", len(rows))


if __name__ == "__main__":
    main()
