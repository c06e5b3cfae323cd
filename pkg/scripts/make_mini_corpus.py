"""Regenerate the bundled mini corpus of small JavaScript files.

    python scripts/make_mini_corpus.py [--files 100] [--seed 7]
"""

import argparse
import random
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "coderep" / "data" / "mini_corpus"

CALLEES = [
    "setTimeout", "setInterval", "assertEqual", "addEventListener", "copyFile", "moveTo", "insertBefore",
    "fetchUrl", "parse_int", "mergeObjects", "drawLine", "resizeBox", "sendMessage", "computeRatio",
    "formatDate2", "padLeft", "indexOfChar", "spliceArray", "setAttr", "bindHandler",
]
OBJECTS = ["document", "window", "node", "list", "this.model", "util", "cache", "ctx", "el", "api"]
METHODS = ["appendChild", "replaceChild", "setItem", "splice", "fillRect", "on", "emit", "slice", "concat", "send"]
VARS = ["delay", "fn", "callback", "width", "height", "count", "total", "item", "index", "name", "value",
        "src", "dest", "left", "right", "start", "end", "options", "result", "key", "user_id", "maxLen",
        "x", "y", "offset", "data", "buffer", "len", "limit", "msg"]
STRINGS = ['"click"', '"id"', "'utf8'", '"error"', '"ready"', "'name'", '"a b"', '"/tmp"']
NUMBERS = ["0", "1", "2", "10", "100", "250", "0.5", "3"]
ARITH = ["+", "-", "*", "/", "%"]
COMPARE = ["<", "<=", ">", ">=", "===", "!==", "==", "!="]
LOGIC = ["&&", "||"]
BITS = ["&", "|", "^", "<<", ">>"]


class Gen:
    def __init__(self, rng):
        self.r = rng

    def var(self):
        return self.r.choice(VARS)

    def atom(self):
        roll = self.r.random()
        if roll < 0.6:
            return self.var()
        if roll < 0.8:
            return self.r.choice(NUMBERS)
        return self.r.choice(STRINGS)

    def operand(self):
        roll = self.r.random()
        if roll < 0.7:
            return self.atom()
        if roll < 0.85:
            return f"{self.var()}.{self.r.choice(['length', 'size', 'x', 'y'])}"
        return f"{self.var()}[{self.r.choice(['0', 'i', 'j'])}]"

    def binop(self, group=None):
        group = group or self.r.choice([ARITH, ARITH, COMPARE, COMPARE, LOGIC, BITS])
        a, b = self.operand(), self.operand()
        if self.r.random() < 0.2:
            return f"{a} {self.r.choice(group)} {b} {self.r.choice(ARITH)} {self.operand()}"
        return f"{a} {self.r.choice(group)} {b}"

    def arg(self):
        roll = self.r.random()
        if roll < 0.55:
            return self.var()
        if roll < 0.7:
            return self.r.choice(NUMBERS)
        if roll < 0.8:
            return self.r.choice(STRINGS)
        if roll < 0.88:
            return f"function () {{ {self.simple_call()}; }}"
        if roll < 0.94:
            return f"{self.var()}.{self.r.choice(['length', 'value', 'next'])}"
        return f"[{self.atom()}, {self.atom()}]"

    def two_args(self):
        a = self.arg()
        b = self.arg()
        while b == a:
            b = self.arg()
        return a, b

    def call(self):
        a, b = self.two_args()
        if self.r.random() < 0.55:
            return f"{self.r.choice(CALLEES)}({a}, {b})"
        return f"{self.r.choice(OBJECTS)}.{self.r.choice(METHODS)}({a}, {b})"

    def simple_call(self):
        return f"{self.r.choice(CALLEES)}({self.var()})"

    def statement(self, depth=0):
        roll = self.r.random()
        if roll < 0.25:
            return f"{self.call()};"
        if roll < 0.4:
            return f"var {self.var()} = {self.call()};"
        if roll < 0.55:
            return f"{self.var()} = {self.binop()};"
        if roll < 0.65:
            return f"return {self.binop()};"
        if roll < 0.72 and depth < 2:
            return f"if ({self.binop(COMPARE)}) {{ {self.statement(depth + 1)} }}"
        if roll < 0.78 and depth < 2:
            body = self.statement(depth + 1)
            return f"for (var i = 0; i < {self.var()}.length; i++) {{ {body} }}"
        if roll < 0.84 and depth < 2:
            return f"while ({self.binop(LOGIC)}) {{ {self.statement(depth + 1)} }}"
        if roll < 0.92:
            return f"{self.var()} = {self.var()} ? {self.call()} : {self.atom()};"
        return f"{self.simple_call()};"

    def function(self):
        name = f"{self.r.choice(['handle', 'update', 'render', 'load', 'check'])}{self.r.choice(VARS).capitalize()}"
        params = ", ".join(self.r.sample(VARS, self.r.randint(0, 3)))
        body = "\n  ".join(self.statement() for _ in range(self.r.randint(2, 6)))
        return f"function {name}({params}) {{\n  {body}\n}}"


# A handful of idioms recur across files, as they do in real code.
SHARED = [
    "setTimeout(fn, delay);",
    "el.addEventListener(\"click\", callback);",
    "for (var i = 0; i < len; i++) { total = total + data[i]; }",
    "if (start < end) { copyFile(src, dest); }",
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--files", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    gen = Gen(rng)
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.js"):
        old.unlink()
    for n in range(args.files):
        parts = [f"// generated file {n:03d}"]
        if rng.random() < 0.3:
            parts.append(rng.choice(SHARED))
        for _ in range(rng.randint(2, 4)):
            parts.append(gen.function())
        for _ in range(rng.randint(1, 3)):
            parts.append(gen.statement())
        (OUT / f"file{n:03d}.js").write_text("\n\n".join(parts) + "\n", encoding="utf-8")
    print(f"wrote {args.files} files to {OUT}")


if __name__ == "__main__":
    main()
