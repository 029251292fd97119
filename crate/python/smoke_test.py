#!/usr/bin/env python3
"""Smoke test for the crankshaft_py extension module.

Build the extension first:

    cargo build -p crankshaft-py --release

then run this script from anywhere inside the repository:

    python3 python/smoke_test.py
"""

import json
import os
import shutil
import sys
import sysconfig
import tempfile
from pathlib import Path


def find_cdylib(repo_root: Path) -> Path | None:
    target = os.environ.get("CARGO_TARGET_DIR")
    target_dirs = [Path(target)] if target else [repo_root / "target"]
    stem = "crankshaft_py"
    names = [f"lib{stem}.so", f"lib{stem}.dylib", f"{stem}.dll"]
    for target_dir in target_dirs:
        for profile in ("release", "debug"):
            for name in names:
                candidate = target_dir / profile / name
                if candidate.exists():
                    return candidate
    return None


def import_module(repo_root: Path):
    lib = find_cdylib(repo_root)
    if lib is None:
        print(
            "crankshaft_py cdylib not found; build it first:\n"
            "    cargo build -p crankshaft-py --release",
            file=sys.stderr,
        )
        sys.exit(1)
    staging = Path(tempfile.mkdtemp(prefix="crankshaft_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(lib, staging / f"crankshaft_py{suffix}")
    sys.path.insert(0, str(staging))
    import crankshaft_py

    return crankshaft_py


def main() -> None:
    repo_root = Path(__file__).resolve().parent.parent
    ck = import_module(repo_root)

    checks = 0

    def expect(label, got, want):
        nonlocal checks
        assert got == want, f"{label}: got {got!r}, want {want!r}"
        checks += 1

    # series layer
    expect("p-series coefficients", ck.partition_gf(5).coeffs(), [1, 1, 2, 3, 5, 7])
    expect(
        "Euler product",
        ck.pochhammer_inf(1, 7).coeffs(),
        [1, -1, -1, 0, 0, 1, 0, 1],
    )
    one = ck.pochhammer_inf(1, 30) * ck.partition_gf(30)
    expect("product times inverse", one.coeffs(), [1] + [0] * 30)
    expect("gaussian binomial", ck.gaussian_binomial(4, 2, 6).coeffs(), [1, 1, 2, 1, 1, 0, 0])
    expect("M_3 series at 18", ck.mk_gf(3, 18).coeff(18), 3)
    expect("Ptilde_2 series at 17", ck.pk_tilde_gf(2, 20).coeff(17), 9)
    doc = json.loads(ck.partition_gf(3).to_json())
    expect("series JSON shape", doc, {"order": 3, "coeffs": ["1", "1", "2", "3"]})

    # objects layer
    expect("partitions of 5", len(ck.partitions_of(5)), 7)
    expect("first partition of 5", ck.partitions_of(5)[0], [5])
    expect("unimodal compositions of 4", len(ck.unimodal_compositions_of(4)), 8)
    expect("unimodal with two maxima", len(ck.unimodal_with_max_mult(4, 2)), 4)
    expect("conjugate", ck.conjugate([5, 4, 4, 1, 1, 1]), [6, 3, 3, 3, 1])
    expect("rotation", ck.rotate_star([5, 4, 4, 1, 1, 1]), [1, 3, 3, 3, 6])
    expect("staircase G_2", ck.staircase(2), [3, 2])
    expect("crank of (2,1,1,1)", ck.crank([2, 1, 1, 1]), -3)
    expect("is_unimodal", ck.is_unimodal([1, 2, 1]), True)
    expect("is_unimodal dip", ck.is_unimodal([2, 1, 2]), False)
    expect("vector partitions of 1", len(ck.vector_partitions_of(1)), 3)

    # statistics layer with dual backends
    stats = ck.Statistics(60)
    expect("p(20)", stats.p(20), 627)
    expect("u_0(4)", stats.u(0, 4), 8)
    expect("u_1(4)", stats.u(1, 4), 12)
    expect("u_2(4)", stats.u(2, 4), 4)
    expect("C_0(5)", stats.c(0, 5), 3)
    expect("C_2(1)", stats.c(2, 1), -1)
    expect("M_3(18)", stats.m_k(3, 18), 3)
    expect("Ptilde_2(17)", stats.p_tilde(2, 17), 9)
    expect("N_V(0,1)", stats.n_v(0, 1), -1)
    expect("crank_count(-1,1)", stats.crank_count(-1, 1), 1)
    table = json.loads(stats.table("u", 0, 5, m=0))
    expect("table rows", [row["value"] for row in table["values"]], ["0", "1", "2", "4", "8", "15"])

    # bijections layer
    expect("thm1_phi", ck.thm1_phi([1, 2, 2, 1]), [1, 2, 1, 1])
    expect("thm1_psi", ck.thm1_psi([1, 3, 1]), [1, 2, 1])
    expect("franklin fixes G_2", ck.franklin([3, 2]), [3, 2])
    expect("franklin toggles", ck.franklin([3]), [2, 1])
    expect("sec5_psi", ck.sec5_psi(0, [2, 1], [1], 1), [1, 3, 1])
    expect("sec5_psi_inverse", ck.sec5_psi_inverse([1, 3, 1], 1), ([2, 1], [1]))
    expect(
        "sec6_f",
        ck.sec6_f([8, 8, 5, 3, 2, 2, 1, 1, 1, 1]),
        [8, 8, 5, 3, 2, 2, 2, 1, 1],
    )
    expect("sec6_g", ck.sec6_g(2, [3, 2], "B"), ([3, 3, 3, 2, 1], "Pk"))
    expect(
        "sec6_g_inverse",
        ck.sec6_g_inverse(2, [3, 3, 3, 2, 1], "Pk"),
        ([3, 2], "B"),
    )

    report = json.loads(ck.verify_bijection("sec6_f", 17))
    expect("sec6_f verifier at 17", report["status"], "pass")
    report = json.loads(ck.verify_bijection("sec5_psi", 12, m=2, j=0))
    expect("sec5_psi verifier", report["status"], "pass")

    # identity checks
    reports = json.loads(ck.run_check("thm1", 20))
    expect("thm1 check count", len(reports), 1)
    expect("thm1 check status", reports[0]["status"], "pass")
    reports = json.loads(ck.run_check("xz", 30, k_lo=1, k_hi=3))
    expect("xz all pass", all(r["status"] == "pass" for r in reports), True)

    # error surfaces
    try:
        ck.crank([])
    except ValueError:
        checks += 1
    else:
        raise AssertionError("crank of the empty partition must raise")
    try:
        ck.partition_gf(4) + ck.partition_gf(5)
    except ValueError:
        checks += 1
    else:
        raise AssertionError("order mismatch must raise")

    print(f"crankshaft_py smoke test: all {checks} checks passed")


if __name__ == "__main__":
    main()
