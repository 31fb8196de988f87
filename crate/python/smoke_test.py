"""Smoke test for the kerov extension module.

Build and install it first:  pip install --no-build-isolation ./crates/python
"""

from fractions import Fraction
from math import factorial

import kerov


def main():
    parts = kerov.partitions(4)
    assert parts == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert kerov.conjugate([3, 1]) == [2, 1, 1]

    for alpha in (1, "2", Fraction(1, 2), "5/3"):
        total = sum(kerov.jack_weight(p, alpha) for p in kerov.partitions(6))
        assert total == 1, (alpha, total)
        for p in kerov.partitions(5):
            dual = kerov.jack_weight(kerov.conjugate(p), 1 / Fraction(str(alpha)))
            assert kerov.jack_weight(p, alpha) == dual

    # Plancherel weight is f_lambda^2 / n!, with f from the hook formula
    assert kerov.jack_weight([2, 1]) == Fraction(4, 6)

    # J_(3) at alpha = 2 in the power basis: 8 p_3 + 6 p_21 + p_111
    assert kerov.theta([3], [3], 2) == 8
    assert kerov.theta([3], [2, 1], 2) == 6
    assert kerov.theta([3], [1, 1, 1], 2) == 1

    # at alpha = 1, theta is |C| chi / dim
    for lam in kerov.partitions(4):
        for mu in kerov.partitions(4):
            size = factorial(4)
            for i in set(mu):
                size //= i ** mu.count(i) * factorial(mu.count(i))
            dim = kerov.character(lam, [1, 1, 1, 1])
            assert kerov.theta(lam, mu, 1) == Fraction(size * kerov.character(lam, mu), dim)

    moves = kerov.up_transitions([2, 1], "1/2")
    assert sum(p for _, p in moves) == 1
    assert kerov.content_moment([2, 1], 2, "1/2") == Fraction(3, 2)
    assert kerov.jack_expect_s(10, 4, 1) == 2 * 10 ** 2 - 10

    path = kerov.sample_path(20, 1, 7)
    assert path == kerov.sample_path(20, 1, 7) and len(path) == 20

    assert abs(kerov.w([2], 1) - 1.0) < 1e-12
    rows = kerov.clt([2], 1, 20000, 3)
    assert abs(rows[0]["ks"] - 0.3413) < 0.02, rows

    ok, count = kerov.verify(3, ["1", "2"])
    assert ok and count > 0

    try:
        kerov.jack_weight([1, 2])
    except ValueError:
        pass
    else:
        raise AssertionError("non-partition accepted")

    print("kerov smoke test ok")


if __name__ == "__main__":
    main()
