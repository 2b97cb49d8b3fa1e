# Copyright 2026 The nodeunlearn Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse
import sys

from nodeunlearn_dataprep import convert as convert_mod
from nodeunlearn_dataprep import oracle


def main(argv=None):
    parser = argparse.ArgumentParser(prog="nodeunlearn-dataprep")
    sub = parser.add_subparsers(dest="command", required=True)

    conv = sub.add_parser("convert", help="write an interchange directory")
    conv.add_argument("--source", required=True)
    conv.add_argument("--out", required=True)
    conv.add_argument("--name", required=True, choices=sorted(convert_mod.EXPECTED))
    conv.add_argument("--train-frac", type=float, default=0.9)
    conv.add_argument("--seed", type=int, default=0)
    conv.add_argument("--raw-features", action="store_true",
                      help="skip row normalisation of the features")

    orc = sub.add_parser("oracle", help="write the reference-value fixture file")
    orc.add_argument("--out", default="tests/fixtures/oracle.json")

    args = parser.parse_args(argv)
    if args.command == "oracle":
        oracle.write_fixtures(args.out)
        return 0
    try:
        m = convert_mod.convert(args.source, args.out, args.name, args.train_frac,
                                args.seed, not args.raw_features)
    except convert_mod.ConversionError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"{m.name}: {m.nodes} nodes, {m.edges} edges ({m.raw_edges} raw), "
          f"{m.features} features, {m.classes} classes")
    return 0


if __name__ == "__main__":
    sys.exit(main())
