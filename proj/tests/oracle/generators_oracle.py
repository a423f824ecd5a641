"""Independent oracle for generator matrices.

Builds each generator from its defining formula with sympy and writes exact
coordinates over (1, w, w^2, w^3), w = exp(i pi/4), to tests/golden/generators.json.
Rows index outputs, columns index inputs, first wire is the most significant bit.
"""
import itertools
import json
import pathlib

import sympy as sp

W = sp.exp(sp.I * sp.pi / 4)
H1 = sp.Matrix([[1, 1], [1, -1]]) / sp.sqrt(2)


def kron(a, b):
    return sp.kronecker_product(a, b) if a.shape != (1, 1) else a[0, 0] * b


def kpow(m, k):
    r = sp.Matrix([[1]])
    for _ in range(k):
        r = kron(r, m)
    return r


def spider_z(alpha, n, m):
    r = sp.zeros(2 ** m, 2 ** n)
    r[0, 0] += 1
    r[2 ** m - 1, 2 ** n - 1] += sp.exp(sp.I * alpha)
    return r


def spider_x(alpha, n, m):
    return kpow(H1, m) * spider_z(alpha, n, m) * kpow(H1, n)


def tensor_matrix(n, m, f):
    """matrix from a function of (input bits, output bits)"""
    r = sp.zeros(2 ** m, 2 ** n)
    for ins in itertools.product([0, 1], repeat=n):
        for outs in itertools.product([0, 1], repeat=m):
            col = int("".join(map(str, ins)) or "0", 2)
            row = int("".join(map(str, outs)) or "0", 2)
            r[row, col] = f(ins, outs)
    return r


def coords(v):
    """a + b w + c w^2 + d w^3 with rational a..d"""
    v = sp.nsimplify(sp.expand_complex(sp.simplify(v)), [sp.sqrt(2)])
    x, y = sp.re(v), sp.im(v)
    s2 = sp.sqrt(2)

    def split(t):
        t = sp.expand(t)
        q = t.coeff(s2)
        p = sp.simplify(t - q * s2)
        return sp.Rational(p), sp.Rational(q)

    p, q = split(x)
    r, s = split(y)
    out = [p, q + s, r, s - q]
    res = []
    for c in out:
        c = sp.Rational(c)
        den = c.q
        e = 0
        while den % 2 == 0:
            den //= 2
            e += 1
        assert den == 1, "non-dyadic coefficient"
        res.append({"num": str(c.p), "exp": e})
    return res


def entry(name, kind, n, m, mat, **extra):
    assert mat.shape == (2 ** m, 2 ** n)
    rec = {"name": name, "kind": kind, "inputs": n, "outputs": m}
    rec.update(extra)
    rec["entries"] = [[coords(mat[i, j]) for j in range(mat.shape[1])] for i in range(mat.shape[0])]
    return rec


def main():
    pi = sp.pi
    g = []
    g.append(entry("H", "H", 1, 1, H1))
    for a, n, m in [(0, 1, 1), (pi / 4, 1, 1), (pi / 2, 1, 2), (pi, 2, 1), (3 * pi / 4, 0, 0), (pi / 4, 0, 1),
                    (7 * pi / 4, 2, 2)]:
        g.append(entry(f"Z({a},{n}->{m})", "Z", n, m, spider_z(a, n, m), phase_pi4=int(a / (pi / 4))))
    for a, n, m in [(0, 1, 1), (pi, 1, 1), (pi / 2, 1, 2), (pi / 4, 0, 1), (pi, 1, 0), (5 * pi / 4, 2, 1)]:
        g.append(entry(f"X({a},{n}->{m})", "X", n, m, spider_x(a, n, m), phase_pi4=int(a / (pi / 4))))
    g.append(entry("cup", "cup", 2, 0, tensor_matrix(2, 0, lambda i, o: int(i[0] == i[1]))))
    g.append(entry("cap", "cap", 0, 2, tensor_matrix(0, 2, lambda i, o: int(o[0] == o[1]))))
    g.append(entry("swap", "swap", 2, 2, tensor_matrix(2, 2, lambda i, o: int(o == (i[1], i[0])))))
    # ZW
    g.append(entry("W 1->1", "black-1-1", 1, 1, tensor_matrix(1, 1, lambda i, o: int(o[0] != i[0]))))
    g.append(entry("W 1->2", "black-1-2", 1, 2, tensor_matrix(1, 2, lambda i, o: int(i[0] + o[0] + o[1] == 1))))
    g.append(entry("zw-z 1->1", "white-1-1", 1, 1, tensor_matrix(1, 1, lambda i, o: (1 if i[0] == 0 else -1) * int(i == o))))
    g.append(entry("zw-z 2->1", "white-2-1", 2, 1,
                   tensor_matrix(2, 1, lambda i, o: (1 if sum(i) == 0 and o[0] == 0 else (-1 if sum(i) == 2 and o[0] == 1 else 0)))))
    g.append(entry("zw-cross", "cross", 2, 2,
                   tensor_matrix(2, 2, lambda i, o: int(o[0] == i[1] and o[1] == i[0]) * (-1) ** (i[0] * i[1]))))
    g.append(entry("half", "half", 0, 0, sp.Matrix([[sp.Rational(1, 2)]])))

    def white(r, n, m):
        return tensor_matrix(n, m, lambda i, o: 1 if sum(i) + sum(o) == 0 else (r if all(i) and all(o) else 0))

    g.append(entry("white(w,1->2)", "white", 1, 2, white(W, 1, 2), param=coords(W)))
    g.append(entry("white(0,2->1)", "white", 2, 1, white(0, 2, 1), param=coords(0)))
    g.append(entry("white(1/2+i,1->1)", "white", 1, 1, white(sp.Rational(1, 2) + sp.I, 1, 1),
                   param=coords(sp.Rational(1, 2) + sp.I)))
    g.append(entry("triangle(1)", "triangle", 1, 1, sp.Matrix([[1, 1], [0, 1]]), param=coords(1)))
    g.append(entry("triangle(-3/4+w)", "triangle", 1, 1, sp.Matrix([[1, sp.Rational(-3, 4) + W], [0, 1]]),
                   param=coords(sp.Rational(-3, 4) + W)))
    out = pathlib.Path(__file__).resolve().parent.parent / "golden" / "generators.json"
    out.write_text(json.dumps(g, indent=1) + "\n")
    print(f"wrote {len(g)} matrices to {out}")


if __name__ == "__main__":
    main()
