"""Smoke tests for the python module: a few exact values per exported call."""
import math

import fmasr

I = (1.0, 0.0, 1.0)
O = (0.0, 0.0)


def approx(a, b, tol=1e-12):
    assert abs(a - b) <= tol, (a, b)


def main():
    approx(fmasr.norm_eval(I, O, (3.0, 4.0)), 5.0)
    approx(fmasr.norm_eval(I, (0.9, 0.0), (1.0, 0.0)), 0.1)

    gx, gy = fmasr.norm_grad(I, (0.9, 0.0), (0.0, 1.0))
    approx(gx, -0.9)
    approx(gy, 1.0)

    (da, db, dc), (wx, wy) = fmasr.dual_norm(I, (0.5, 0.0))
    approx(da, 16.0 / 9.0)
    approx(db, 0.0)
    approx(dc, 4.0 / 3.0)
    approx(wx, -0.375)
    approx(wy, 0.0)

    assert fmasr.is_acute(I, O, (1.0, 0.0), (0.0, 1.0))
    assert not fmasr.is_acute((1.0, 2.0, 8.0), O, (1.0, 0.0), (1.0, -1.0))

    approx(fmasr.anisotropy_ratio((0.1, 0.0, 10.0), O), 10.0, tol=1e-6)

    assert fmasr.build_mesh(I, O) == [(1, 0), (0, 1), (-1, 0), (0, -1)]
    assert len(fmasr.isotropic_mesh(1.0)) == 8
    assert [c for _, c in fmasr.mesh_cardinality_stats(I, O, 16)] == [4] * 16

    value, t, interior = fmasr.hopf_lax_edge(I, O, (1.0, 0.0), (0.0, 1.0), 0.0, 0.0)
    approx(value, 1.0 / math.sqrt(2.0))
    approx(t, 0.5, tol=1e-9)
    assert interior

    approx(fmasr.exact_spiral((10.0, 0.0)), math.log(10.0 + math.sqrt(101.0)))

    assert fmasr.test_ids() == ["current", "spiral", "seismic", "segmentation"]
    run = fmasr.solve_test("current", "fm-asr", 31)
    assert run["points"] == 31 * 31
    assert run["residual"] <= 1e-10
    assert 0.5 < run["max_value"] < 5.0

    print("smoke ok")


if __name__ == "__main__":
    main()
