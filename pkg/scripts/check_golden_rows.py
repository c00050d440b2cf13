"""Cell-by-cell comparison of engine output against the golden comparison rows."""

import sys
import time

from dbcompare import generate_instances
from dbcompare.pareto import MafiaBound, pareto_pipeline
from dbcompare.reporting import scaled_row

# published blocks: y -> {protocol: (rep_id, n, pm, pd, pt, b, c, mKb, f, total)}
GOLDEN_ROWS = {
    "2^-1": {
        "BC": ("BC-{1}", 1, "2^-1", "2^-1", "2^0", False, 2, 0, True, 256),
        "KA": ("KA-{2,0.5}", 2, "2^-1", "2^0", "2^0", False, 1, 0, False, 10),
        "SKI": ("SKI-{3,2}", 3, "2^-1", "2^-1", "2^-3", True, 1, 1, False, 254),
        "SwissKnife": ("SwissKnife-{1}", 1, "2^-1", "2^0", "2^0", False, 2, 1, True, 255),
        "TMA": ("TMA-{2}", 2, "2^-1", "2^-1", "2^0", False, 1, 0, False, 1),
        "Tree": ("Tree-{2,2}", 2, "2^-1", "2^0", "2^0", False, 1, 0, False, 400),
    },
    "2^-16": {
        "BC": ("BC-{16}", 16, "2^-16", "2^-16", "2^0", False, 2, 0, True, 241),
        "KA": ("KA-{22,0.55}", 22, "2^-16", "2^-4", "2^0", False, 1, 0, False, 4),
        "Poulidor": ("Poulidor-{23}", 23, "2^-16", "2^-8", "2^0", False, 1, 0, False, 1),
        "SKI": ("SKI-{39,2}", 39, "2^-16", "2^-16", "2^-39", True, 1, 0, False, 218),
        "SwissKnife": ("SwissKnife-{16}", 16, "2^-16", "2^-6", "2^-6", False, 2, 0, True, 241),
        "TMA": ("TMA-{27}", 27, "2^-16", "2^-16", "2^0", False, 1, 0, False, 1),
        "Tree": ("Tree-{24,6}", 24, "2^-16", "2^-10", "2^0", False, 1, 0, False, 394),
    },
    "2^-32": {
        "BC": ("BC-{32}", 32, "2^-32", "2^-32", "2^0", False, 2, 0, True, 225),
        "KA": ("KA-{37,0.85}", 37, "2^-32", "2^-2", "2^0", False, 1, 0, False, 2),
        "Poulidor": ("Poulidor-{42}", 42, "2^-32", "2^-16", "2^0", False, 1, 0, False, 1),
        "SKI": ("SKI-{78,2}", 78, "2^-32", "2^-32", "2^-78", True, 1, 0, False, 179),
        "SwissKnife": ("SwissKnife-{32}", 32, "2^-32", "2^-13", "2^-13", False, 2, 0, True, 225),
        "TMA": ("TMA-{53}", 53, "2^-32", "2^-32", "2^0", False, 1, 0, False, 1),
        "Tree": ("Tree-{48,6}", 48, "2^-32", "2^-21", "2^0", False, 1, 1, False, 368),
    },
    "2^-64": {
        "BC": ("BC-{64}", 64, "2^-64", "2^-64", "2^0", False, 2, 0, True, 193),
        "KA": ("KA-{73,0.8}", 73, "2^-64", "2^-6", "2^0", False, 1, 0, False, 4),
        "Poulidor": ("Poulidor-{78}", 78, "2^-64", "2^-32", "2^0", False, 1, 0, False, 1),
        "SKI": ("SKI-{155,2}", 155, "2^-64", "2^-64", "2^-155", True, 1, 0, False, 102),
        "SwissKnife": ("SwissKnife-{64}", 64, "2^-64", "2^-26", "2^-26", False, 2, 0, True, 193),
        "TMA": ("TMA-{106}", 106, "2^-64", "2^-64", "2^0", False, 1, 0, False, 1),
        "Tree": ("Tree-{96,6}", 96, "2^-64", "2^-43", "2^0", False, 1, 2, False, 295),
    },
    "2^-96": {
        "BC": ("BC-{96}", 96, "2^-96", "2^-96", "2^0", False, 2, 0, True, 161),
        "KA": ("KA-{113,0.75}", 113, "2^-96", "2^-12", "2^0", False, 1, 0, False, 5),
        "Poulidor": ("Poulidor-{114}", 114, "2^-96", "2^-49", "2^0", False, 1, 0, False, 1),
        "SKI": ("SKI-{232,2}", 232, "2^-96", "2^-96", "2^-232", True, 1, 1, False, 25),
        "SwissKnife": ("SwissKnife-{96}", 96, "2^-96", "2^-39", "2^-39", False, 2, 1, True, 161),
        "TMA": ("TMA-{158}", 158, "2^-96", "2^-96", "2^0", False, 1, 0, False, 1),
        "Tree": ("Tree-{144,6}", 144, "2^-96", "2^-64", "2^0", False, 1, 3, False, 223),
    },
    "2^-128": {
        "BC": ("BC-{128}", 128, "2^-128", "2^-128", "2^0", False, 2, 0, True, 129),
        "KA": ("KA-{145,0.8}", 145, "2^-128", "2^-12", "2^0", False, 1, 0, False, 4),
        "Poulidor": ("Poulidor-{148}", 148, "2^-128", "2^-65", "2^0", False, 1, 0, False, 1),
        "SKI": ("SKI-{219,3}", 219, "2^-128", "2^-90", "2^-128", True, 1, 1, False, 1),
        "SwissKnife": ("SwissKnife-{128}", 128, "2^-128", "2^-53", "2^-53", False, 2, 1, True, 129),
        "TMA": ("TMA-{210}", 210, "2^-128", "2^-128", "2^0", False, 1, 1, False, 1),
        "Tree": ("Tree-{160,16}", 160, "2^-128", "2^-77", "2^0", False, 1, 1280, False, 150),
    },
}


def run(instances=None, quiet=False):
    insts = instances if instances is not None else generate_instances()
    mism = 0
    t0 = time.time()
    for ylabel, expected in GOLDEN_ROWS.items():
        bound = MafiaBound.parse(ylabel)
        _, sol, rows = pareto_pipeline(insts, bound)
        got = {}
        for r in rows:
            sr = scaled_row(r)
            got[r.protocol] = (sr.instance_id, sr.n, sr.p_m, sr.p_d, sr.p_t,
                               sr.b, sr.c, sr.m_kb, sr.f, sr.total)
        all_protocols = sorted(set(expected) | set(got))
        for p in all_protocols:
            e, g = expected.get(p), got.get(p)
            if e != g:
                mism += 1
                if not quiet:
                    print(f"[{ylabel}] {p}:")
                    print(f"    expected {e}")
                    print(f"    got      {g}")
    print(f"mismatched cells: {mism}  ({time.time()-t0:.1f}s)")
    return mism


if __name__ == "__main__":
    sys.exit(0 if run() == 0 else 1)
