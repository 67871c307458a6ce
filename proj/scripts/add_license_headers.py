#!/usr/bin/env python3
# Copyright 2026 The wittsum Authors
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

"""Prepends the Apache-2.0 header to project sources; idempotent."""

import pathlib
import sys

NOTICE = """Copyright 2026 The wittsum Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License."""

MARKER = "Copyright 2026 The wittsum Authors"
DIRS = ["core", "tools", "tests", "benchmarks", "cmake", "scripts"]
CXX = {".cpp", ".hpp", ".h", ".cc", ".in"}


def block(style):
    lines = NOTICE.splitlines()
    if style == "c":
        body = "\n".join(" *" + (" " + l if l else "") for l in lines)
        return "/*\n" + body + "\n */\n\n"
    return "\n".join("#" + (" " + l if l else "") for l in lines) + "\n\n"


def style_of(path):
    if path.suffix in CXX and not path.name.endswith(".cmake.in"):
        return "c"
    if path.suffix in {".cmake", ".py"} or path.name in {"CMakeLists.txt"} or path.name.endswith(".cmake.in"):
        return "hash"
    return None


def apply(path):
    style = style_of(path)
    if style is None:
        return False
    text = path.read_text()
    if MARKER in text[:400]:
        return False
    shebang = ""
    if text.startswith("#!"):
        shebang, _, text = text.partition("\n")
        shebang += "\n"
    path.write_text(shebang + block(style) + text)
    return True


def main(root):
    root = pathlib.Path(root)
    files = [root / "CMakeLists.txt"]
    for d in DIRS:
        files += sorted(p for p in (root / d).rglob("*") if p.is_file())
    changed = [p for p in files if apply(p)]
    for p in changed:
        print(p.relative_to(root))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent)
