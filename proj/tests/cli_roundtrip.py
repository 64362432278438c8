import json, subprocess, sys

cli = sys.argv[1]
out = subprocess.run([cli, "integral", "--n", "2", "--format", "json"], check=True, capture_output=True, text=True).stdout
doc = json.loads(out)
assert json.dumps(doc, indent=2) + "\n" == out, "re-serialised JSON differs"
assert set(doc) == {"meta", "polynomial", "report"}
assert [e["d_power"] for e in doc["polynomial"]] == [1, 2, 3]
for e in doc["polynomial"]:
    for k in ("delta0", "delta1"):
        num, den = e[k].split("/")
        int(num), int(den)
