"""Quick script to print certificate sizes across the standard families."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.app import reports
from src.generators import incidence_poset, standard_example
from src.realizers import local_width, verify_boolean_realizer, verify_local_realizer
from src.transforms import build_partition_scheme, local3_to_boolean

print("=== Standard examples ===\n")
print(f"{'k':>4} {'n':>5} {'dim':>4} {'bdim<=':>7} {'lwidth':>6} {'converted':>10} {'colours':>8}")
for k in (3, 4, 5, 8, 16, 32, 64):
    ex = standard_example(k)
    assert verify_local_realizer(ex.poset, ex.local)
    scheme = build_partition_scheme(ex.poset, ex.local)
    br = local3_to_boolean(ex.poset, ex.local)
    bdim = ex.boolean.size if ex.boolean is not None else "-"
    print(f"{k:>4} {ex.poset.n:>5} {ex.realizer.size:>4} {bdim:>7} {local_width(ex.local):>6} {br.size:>10} {scheme.color_count:>8}")

print("\n=== Incidence posets of K_n ===\n")
for n in (4, 8, 16, 25):
    inc = incidence_poset(n)
    ok = verify_boolean_realizer(inc.poset, inc.boolean)
    print(f"n={n:>3}  elements={inc.poset.n:>4}  boolean realizer of size {inc.boolean.size}: {'ok' if ok else 'FAILED'}")

print("\n=== Gadget poset sizes ===\n")
print(reports.render(reports.size_frame(range(1, 6))))
