#!/usr/bin/env python3
"""Regenerate the shipped single-entry mutation documents.

Each mutation starts from a valid fixture, is rewritten to its explicit
serialized form, and then has exactly one entry changed.  The manifest
records which object must fail `verify` for each file.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from xmhopf.docio import parse, serialize  # noqa: E402

HERE = pathlib.Path(__file__).resolve().parent
OUT = HERE / "mutations"

MUTATIONS = [
    # (name, source fixture, patch function, object to verify)
    ("mut01_coproduct", "k_xi_z2.json",
     lambda d: d["hopf"]["k_xi_z2"]["coproduct"].__setitem__("0,1", [["2"]]),
     "k_xi_z2"),
    ("mut02_counit", "k_xi_z2.json",
     lambda d: d["hopf"]["k_xi_z2"].__setitem__("counit", ["2"]),
     "k_xi_z2"),
    ("mut03_antipode", "k_xi_z2.json",
     lambda d: d["hopf"]["k_xi_z2"]["antipode"].__setitem__(1, [["2"]]),
     "k_xi_z2"),
    ("mut04_action", "k_xi_z2.json",
     lambda d: d["hopf"]["k_xi_z2"]["action"].__setitem__("0,1", [["2"]]),
     "k_xi_z2"),
    ("mut05_group_table", "k_xi_z2.json",
     lambda d: d["groups"]["z2"]["table"][1].__setitem__(1, 1),
     "z2"),
    ("mut06_cm_action", "k_xi_s3.json",
     lambda d: d["crossed_modules"]["cm_s3"]["action"][1].__setitem__(1, 1),
     "cm_s3"),
    ("mut07_algebra_mul", "bichar_z2.json",
     lambda d: d["hopf"]["bichar_z2"]["components"][0]["mul"][1].__setitem__(1, ["2", "0"]),
     "bichar_z2"),
    ("mut08_unit_vector", "bichar_z2.json",
     lambda d: d["hopf"]["bichar_z2"]["components"][0].__setitem__("unit", ["2", "0"]),
     "bichar_z2"),
    ("mut09_module_action", "k_xi_z2.json",
     lambda d: d["modules"]["k1"]["actions"].__setitem__(0, [["2"]]),
     "k1"),
    ("mut10_xi_map", "k_xi_s3.json",
     lambda d: d["crossed_modules"]["cm_s3"]["xi"].__setitem__(1, 2),
     "cm_s3"),
]


def main():
    OUT.mkdir(exist_ok=True)
    manifest = []
    for name, source, patch, target in MUTATIONS:
        doc = parse((HERE / source).read_bytes())
        explicit = json.loads(serialize(doc).decode("utf-8"))
        patch(explicit)
        path = OUT / f"{name}.json"
        path.write_text(json.dumps(explicit, indent=2, sort_keys=True) + "\n")
        manifest.append({"file": f"{name}.json", "source": source, "verify": target})
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(MUTATIONS)} mutations to {OUT}")


if __name__ == "__main__":
    main()
