"""Smoke test for the Python bindings. Run after `maturin develop`."""

import json

import cyclic_shuffle as cs


def main():
    p = cs.CyclicPerm([4, 1, 3, 2])
    assert p.cmaj() == 4 and p.cdes() == 2
    assert cs.CyclicPerm([6, 4, 1, 3]).descent_bottoms() == [1, 4]
    assert cs.CyclicPerm([3, 4, 5, 1]).letters == [5, 1, 3, 4]
    assert cs.CyclicPerm([5, 1, 3, 4]).split(3).letters == [3, 4, 5, 1]
    assert str(cs.CyclicPerm.parse("[6,3,1,4]")) == "[6,3,1,4]"

    sigma, pi = cs.LinearPerm([6, 3]), cs.LinearPerm([1, 4])
    words = {str(w) for w in cs.linear_shuffles(sigma, pi)}
    assert words == {"6,3,1,4", "6,1,3,4", "6,1,4,3", "1,4,6,3", "1,6,3,4", "1,6,4,3"}
    for k in range(4):
        assert cs.stanley_rhs(sigma, pi, k) == cs.shuffle_maj_gf(sigma, pi, k)

    a, b = cs.CyclicPerm([6, 3]), cs.CyclicPerm([4, 1])
    classes = cs.cyclic_shuffles(a, b)
    assert len(classes) == 6
    assert str(cs.cyclic_stanley_rhs(a, b, 2)) == "2*q^3 + 2*q^4"
    for k in range(4):
        assert cs.cyclic_stanley_rhs(a, b, k) == cs.cyclic_shuffle_maj_gf(a, b, k)
    assert sum(cs.agrr_count(2, 2, 1, 1, k) for k in range(4)) == len(classes)

    for alpha in classes:
        anchor, word = cs.psi_forward(alpha, a, b)
        assert alpha.cdes() == word.des() + 1
        assert cs.psi_inverse(anchor, word, a, b) == alpha

    g = cs.gauss_binomial(4, 2)
    assert g.terms == [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]
    assert g.eval_at_one() == 6

    try:
        cs.LinearPerm([4, 4])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate letters accepted")

    report = json.loads(cs.run_sweep(max_total=5))
    assert report["schema"] == 1 and report["failures"] == []
    print(f"ok: {report['cases_checked']} cases checked")


if __name__ == "__main__":
    main()
