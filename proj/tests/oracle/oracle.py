"""Reference values for the C++ tests, computed without the library.

Run: python3 tests/oracle/oracle.py
The printed values are pasted into the test files; rerun after changing a convention.
"""

import itertools
from fractions import Fraction

import sympy as sp

# <alpha_i, alpha_j^vee>; B2: alpha_1 long, G2: alpha_1 short.
CARTAN = {
    ("A", 1): [[2]],
    ("A", 2): [[2, -1], [-1, 2]],
    ("A", 3): [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    ("B", 2): [[2, -2], [-1, 2]],
    ("G", 2): [[2, -1], [-3, 2]],
}


def positive_roots(cartan):
    """Root strings from the simple roots, in simple-root coordinates."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(r):
                # <a, alpha_i^vee>
                pair = sum(a[k] * cartan[k][i] for k in range(r))
                # p = how far down the alpha_i string through a goes
                p = 0
                b = list(a)
                while True:
                    b[i] -= 1
                    if tuple(b) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    c = list(a)
                    c[i] += 1
                    c = tuple(c)
                    if c not in roots:
                        roots.add(c)
                        nxt.append(c)
        frontier = nxt
    return sorted(roots)


def weyl_dim(cartan, m):
    """Dimension for the dual group, lambda = sum m_i omega_i^vee."""
    num = den = Fraction(1)
    for a in positive_roots(cartan):
        num *= sum(ai * (mi + 1) for ai, mi in zip(a, m))
        den *= sum(a)
    return num / den


def coroot_coords(cartan, m):
    inv = sp.Matrix(cartan).inv()
    # sum_k <alpha_j, alpha_k^vee> x_k = m_j
    return [Fraction(str(v)) for v in inv * sp.Matrix(m)]


def desk_dims():
    out = []
    for key in [("A", 1), ("A", 2), ("A", 3), ("B", 2)]:
        cm = CARTAN[key]
        r = len(cm)
        for m in itertools.product(range(9), repeat=r):
            if not any(m):
                continue
            x = coroot_coords(cm, m)
            if sum(x) <= 4:
                out.append((key, m, [str(v) for v in x], int(weyl_dim(cm, m))))
    for m in [(1, 0), (0, 1)]:
        cm = CARTAN[("G", 2)]
        out.append((("G", 2), m, [str(v) for v in coroot_coords(cm, m)], int(weyl_dim(cm, m))))
    return out


# Type A tableau crystal: a node is a column-strict filling read as a word
# (columns right to left, each top to bottom); signature rule on the reading word.

def semistandard(shape, n):
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    for vals in itertools.product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(r, c)] <= t[(r, c + 1)] for (r, c) in cells if (r, c + 1) in t) and all(
            t[(r, c)] < t[(r + 1, c)] for (r, c) in cells if (r + 1, c) in t
        ):
            yield t


def is_semistandard(t, shape):
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    return all(t[(r, c)] <= t[(r, c + 1)] for (r, c) in cells if (r, c + 1) in t) and all(
        t[(r, c)] < t[(r + 1, c)] for (r, c) in cells if (r + 1, c) in t
    )


def reading_cells(shape):
    ncols = shape[0] if shape else 0
    order = []
    for c in reversed(range(ncols)):
        for r in range(len(shape)):
            if c < shape[r]:
                order.append((r, c))
    return order


def f_op(t, shape, i):
    cells = reading_cells(shape)
    stack = []
    sig = []
    for cell in cells:
        if t[cell] == i:
            sig.append(("+", cell))
        elif t[cell] == i + 1:
            sig.append(("-", cell))
    # a '+' followed by a '-' cancels; what is left reads - ... - + ... +
    for s, cell in sig:
        if s == "-" and stack and stack[-1][0] == "+":
            stack.pop()
        else:
            stack.append((s, cell))
    plus = [cell for s, cell in stack if s == "+"]
    minus = [cell for s, cell in stack if s == "-"]
    return plus, minus


def apply_f(t, shape, i):
    plus, _ = f_op(t, shape, i)
    if not plus:
        return None
    u = dict(t)
    u[plus[0]] = i + 1
    assert is_semistandard(u, shape)
    return u


def phi(t, shape, i):
    return len(f_op(t, shape, i)[0])


def strings(shape, n, word):
    out = []
    for t in semistandard(shape, n):
        cur, c = t, []
        for i in word:
            k = phi(cur, shape, i)
            c.append(k)
            for _ in range(k):
                cur = apply_f(cur, shape, i)
        out.append(tuple(c))
    return sorted(out)


def listed_a3(c):
    c1, c2, c3, c4, c5, c6 = c
    return c1 >= 0 and c2 >= c6 >= 0 and c3 >= c5 >= 0 and c2 + c3 >= c4 >= c5 + c6


def matrix_checks():
    t = sp.symbols("t")

    def y(n, i, p):
        m = sp.eye(n)
        m[i, i - 1] = p
        return m

    word = [2, 1, 3, 2, 1, 3]
    p = [-1, 1 / t, 1 / t, t, -1 / t, -1 / t]
    g = sp.eye(4)
    for i, pi in zip(word, p):
        g = g * y(4, i, pi)
    display = sp.eye(4)
    display[2, 0] = -1
    display[2, 1] = t - 1
    display[3, 0] = -1 / t
    display[3, 1] = 1
    x = sp.Matrix([[1, t], [0, 1]])
    tt = sp.Matrix([[t, 0], [0, 1 / t]])
    u = sp.Matrix([[1, 0], [1 / t, 1]])
    return sp.simplify(g - display) == sp.zeros(4), sp.simplify(u.inv() * x * tt)


def main():
    print("desk suite: (type, m in fundamental coords, coroot coords, dim)")
    total = 0
    for key, m, x, d in desk_dims():
        total += d
        print(f"  {key[0]}{key[1]} m={m} lambda={x} dim={d}")
    print("  entries", len(desk_dims()), "total nodes", total)
    print("A2 theta (shape 2,1), word 121:", strings([2, 1], 3, [1, 2, 1]))
    print("A2 theta (shape 2,1), word 212:", strings([2, 1], 3, [2, 1, 2]))
    print("A3 omega2 (shape 1,1), word 213213:", strings([1, 1], 4, [2, 1, 3, 2, 1, 3]))
    print("A3 theta (shape 2,1,1), word 213213:", strings([2, 1, 1], 4, [2, 1, 3, 2, 1, 3]))
    box = list(itertools.product(range(-3, 4), repeat=6))
    print("A3 listed relations, points of [-3,3]^6 inside:", sum(listed_a3(c) for c in box))
    six = [c for c in box if c[0] <= 0 and c[1] <= 0 and c[2] <= 0 and min(c[3:]) >= 1]
    print("six sign conditions and listed relations together:", sum(listed_a3(c) for c in six))
    ok, rank_one = matrix_checks()
    print("y-product with p = (-1, 1/t, 1/t, t, -1/t, -1/t) equals the display matrix:", ok)
    print("rank one: y(1/t)^-1 x(t) t^alpha =", rank_one.tolist())


if __name__ == "__main__":
    main()
