"""Independent oracles shared by the unit and acceptance tests."""
import itertools
from fractions import Fraction


def seq_table(top):
    f, l = [0, 1], [2, 1]
    while len(f) < top:
        f.append(f[-1] + f[-2])
        l.append(l[-1] + l[-2])
    return f, l


F, L = seq_table(700)


def g_oracle(n, p, q):
    return p * F[n - 1] + q * L[n]


def norm_oracle(n, p, q, pp):
    """Four squares in H(-1, pp), straight from the quadratic form."""
    c = [g_oracle(n + k, p, q) for k in range(4)]
    return c[0] ** 2 + c[1] ** 2 - pp * c[2] ** 2 - pp * c[3] ** 2


def det(m):
    """Leibniz expansion; fine for r <= 4."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if perm[a] > perm[b]:
                    sign = -sign
        term = sign
        for r in range(n):
            term *= m[r][perm[r]]
        total += term
    return total


def inverse(m):
    n = len(m)
    d = det(m)
    adj = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            minor = [[m[i][j] for j in range(n) if j != c] for i in range(n) if i != r]
            adj[c][r] = (-1) ** (r + c) * (det(minor) if minor else 1)
    return [[Fraction(x, d) for x in row] for row in adj]


def coefficient_bounds(rows, box):
    """Bounds on |c_i| for any member x = c . rows with max|x_j| <= box."""
    r = len(rows)
    for cols in itertools.combinations(range(4), r):
        s = [[row[c] for c in cols] for row in rows]
        if det(s):
            inv = inverse(s)  # c = x_S inv
            return [int(box * sum(abs(inv[j][i]) for j in range(r))) + 1 for i in range(r)]
    raise AssertionError("rows are dependent")


def enumerate_members(rows, box):
    """Oracle: every lattice vector in [-box, box]^4, by brute force."""
    bounds = coefficient_bounds(rows, box)
    found = set()
    for coeffs in itertools.product(*(range(-b, b + 1) for b in bounds)):
        v = tuple(sum(k * row[c] for k, row in zip(coeffs, rows)) for c in range(4))
        if all(abs(x) <= box for x in v):
            found.add(v)
    return found


def enumeration_size(rows, box):
    size = 1
    for b in coefficient_bounds(rows, box):
        size *= 2 * b + 1
    return size


def is_hnf(basis):
    piv = basis.pivots
    if list(piv) != sorted(set(piv)):
        return False
    for r, (row, c) in enumerate(zip(basis.rows, piv)):
        if row[c] <= 0 or any(row[:c]):
            return False
        for above in basis.rows[:r]:
            if not 0 <= above[c] < row[c]:
                return False
    return True


def random_matrix(rng, k, lo=-9, hi=9):
    return [tuple(rng.randint(lo, hi) for _ in range(4)) for _ in range(k)]
