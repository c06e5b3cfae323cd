"""Random programs in the supported JavaScript subset, for property tests."""

import random

NAMES = ["a", "b", "c", "x", "y", "fn", "cb", "delay", "count", "list", "node", "user_id", "maxLen",
         "getValue", "value2", "$el", "_tmp", "HTTPServer", "i", "j"]
STRINGS = ['"s"', "'t'", '"a b"', '"x\\"y"', "''", '"click"']
NUMBERS = ["0", "1", "2", "10", "3.5", "0x1F", "1e3", ".5"]
BINOPS = ["+", "-", "*", "/", "%", "<", "<=", ">", ">=", "==", "!=", "===", "!==", "&", "|", "^",
          "<<", ">>", ">>>", "&&", "||", "instanceof", "in"]
ASSIGN = ["=", "+=", "-=", "*=", "|="]


class JsGen:
    def __init__(self, seed):
        self.r = random.Random(seed)

    def name(self):
        return self.r.choice(NAMES)

    def expr(self, d=0):
        r = self.r.random()
        if d > 2 or r < 0.3:
            return self.atom()
        if r < 0.5:
            return f"{self.expr(d + 1)} {self.r.choice(BINOPS)} {self.expr(d + 1)}"
        if r < 0.6:
            return f"({self.expr(d + 1)})"
        if r < 0.7:
            return self.call(d + 1)
        if r < 0.75:
            return f"{self.r.choice(['!', '- ', 'typeof ', '~'])}{self.expr(d + 1)}"
        if r < 0.8:
            return f"{self.expr(d + 1)} ? {self.expr(d + 1)} : {self.expr(d + 1)}"
        if r < 0.85:
            return f"{self.name()}[{self.expr(d + 1)}]"
        if r < 0.9:
            return f"[{', '.join(self.expr(d + 1) for _ in range(self.r.randint(0, 2)))}]"
        if r < 0.94:
            return f"{{{', '.join(f'{self.name()}: {self.expr(d + 1)}' for _ in range(self.r.randint(0, 2)))}}}"
        if r < 0.97:
            return f"function ({self.name()}) {{ return {self.expr(d + 1)}; }}"
        return f"new {self.name()}({self.expr(d + 1)})"

    def atom(self):
        r = self.r.random()
        if r < 0.55:
            return self.name()
        if r < 0.75:
            return self.r.choice(NUMBERS)
        if r < 0.9:
            return self.r.choice(STRINGS)
        if r < 0.95:
            return self.r.choice(["true", "false", "null", "this"])
        return f"{self.name()}.{self.name()}"

    def call(self, d=0):
        n = self.r.choice([0, 1, 2, 2, 2, 3])
        args = ", ".join(self.expr(d + 1) for _ in range(n))
        callee = self.name() if self.r.random() < 0.6 else f"{self.name()}.{self.name()}"
        return f"{callee}({args})"

    def statement(self, d=0):
        r = self.r.random()
        if r < 0.3:
            return f"{self.call()};"
        if r < 0.45:
            return f"var {self.name()} = {self.expr()};"
        if r < 0.6:
            return f"{self.name()} {self.r.choice(ASSIGN)} {self.expr()};"
        if r < 0.7:
            return f"return {self.expr()};"
        if r < 0.77 and d < 2:
            tail = f" else {{ {self.statement(d + 1)} }}" if self.r.random() < 0.4 else ""
            return f"if ({self.expr()}) {{ {self.statement(d + 1)} }}{tail}"
        if r < 0.82 and d < 2:
            return f"while ({self.expr()}) {{ {self.statement(d + 1)} }}"
        if r < 0.86 and d < 2:
            return f"for (var i = 0; i < {self.name()}; i++) {{ {self.statement(d + 1)} }}"
        if r < 0.9 and d < 2:
            return f"function {self.name()}({self.name()}, {self.name()}) {{ {self.statement(d + 1)} }}"
        if r < 0.93:
            return f"{self.name()}++;"
        if r < 0.96:
            return f"throw {self.expr()};"
        e = self.expr()
        if e.startswith(("{", "function")):
            e = f"({e})"
        return f"{e};"

    def program(self, n=None):
        return "\n".join(self.statement() for _ in range(n or self.r.randint(1, 5)))


def programs(count, seed=0):
    g = JsGen(seed)
    return [g.program() for _ in range(count)]


def statements(count, seed=0):
    g = JsGen(seed)
    return [g.statement() for _ in range(count)]
