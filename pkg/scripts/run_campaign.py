"""Run a verification campaign file and a grid of extremal searches.

Reports go to OUT/reports.json, certificates to OUT/certificates/, and a
Markdown summary of the certificates to OUT/certificates.md.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from spex.cli import read_campaigns
from spex.report import render
from spex.search import K1tMinorFree, SearchSpec, StProperty, search_extremal
from spex.verify import verify_theorem


def search_grid() -> list[SearchSpec]:
    specs = [SearchSpec(n, K1tMinorFree(t)) for t in (3, 4, 5) for n in range(t + 1, 10)]
    specs += [SearchSpec(t + 1, StProperty(s, t)) for s, t in ((2, 4), (2, 5), (2, 6), (3, 6))]
    return specs


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--config", default=str(Path(__file__).with_name("campaigns.cfg")))
    ap.add_argument("--out", default="campaign_out")
    ap.add_argument("--skip-search", action="store_true")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    reports = []
    for tag, params in read_campaigns(args.config):
        rep = verify_theorem(tag, params)
        print(rep.render().splitlines()[0], flush=True)
        reports.append(rep.to_dict())
    (out / "reports.json").write_text(json.dumps(reports, indent=2, sort_keys=True) + "\n")

    if not args.skip_search:
        cert_dir = out / "certificates"
        cert_dir.mkdir(exist_ok=True)
        for spec in search_grid():
            cert = search_extremal(spec)
            (cert_dir / f"{spec.config_hash()}.json").write_text(cert.to_json())
        (out / "certificates.md").write_text(render(cert_dir, "markdown"))
        print(f"{len(search_grid())} certificates written to {cert_dir}")
    return 0 if all(r["passed"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
