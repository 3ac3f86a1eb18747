"""Driving the deterministic property-fuzz engine from Python.

The same campaigns are reachable from the shell as ``pv fuzz``.
"""

from paravec import SUITES, run_fuzz

print("A campaign evaluates every registered law against seeded trials.")
print(f"Suites: {', '.join(SUITES)}\n")

report = run_fuzz(seed=42, trials=500)
print(f"seed=42, trials=500 -> {len(report.properties)} properties, "
      f"{report.failed_properties} failing")
print("The same seed always reproduces the same report:",
      run_fuzz(seed=42, trials=500).to_dict() == report.to_dict())

print("\nTo see the suite bite, install a documented defect. Dropping the")
print("cross term of the product breaks associativity and the matrix view:")
broken = run_fuzz(seed=42, trials=50, mutant="mul-drop-cross")
caught = [r for r in broken.properties if r.fails]
print(f"  {len(caught)} properties fail; the first few:")
for r in caught[:5]:
    print(f"    {r.name}  (fails {r.fails}/50, "
          f"first at trial {r.counterexample['trial']})")

first = caught[0].counterexample
print("\nCounterexamples carry the wire form of every input, ready to replay")
print("through the pv command line tool:")
for name, value in first["inputs"].items():
    print(f"  {name} = {value}")
