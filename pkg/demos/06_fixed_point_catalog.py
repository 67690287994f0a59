"""The text format and the shipped fixed point catalog.

Modules, endomorphisms, and comparison cases can be written in a small text
format and fed to the library or the command line tool. Each catalog case
pairs a trace computed by the engine with an independently computed count
(fixed points of a degree d map, a determinant, an eigenvalue count) and the
suite runner checks them for exact equality.
"""

from gradedtrace import builtin_catalog, parse_source, run_case, run_suite

print("== parsing a document ==")
source = """
ring Z[x:2];
free P [0, -2];
matrix F : P -> P { degree 2; rows [[x, 0], [1, x]]; }
module M { gens [0]; rels [[x^2]]; }
hom g : M -> M { degree 2; lift [[x]]; }
"""
doc = parse_source(source)
print(f"parsed: matrices {list(doc.matrices)}, modules {list(doc.modules)}, homs {list(doc.homs)}")

print()
print("== a comparison case in the same format ==")
case_source = """
ring Z;
free E [0];
free O [0];
hom keep : E -> E { lift [[1]]; }
hom drop : O -> O { lift [[-2]]; }
case winding {
  title "circle map of winding number -2";
  even keep;
  odd drop;
  oracle circle_fixed_points [-2];
}
"""
case_doc = parse_source(case_source)
report = run_case(case_doc.cases["winding"])
print(report.line())

print()
print("== the shipped catalog ==")
catalog = builtin_catalog()
suite = run_suite(list(catalog.values()))
for r in suite.reports:
    print(r.line())
print(suite.summary())

print()
print("the same suite is available from the shell:")
print("  gradedtrace lefschetz run")
print("  gradedtrace trace free -m endos.txt --format json")
print("  gradedtrace --emit-grammar   # prints the full input grammar")
