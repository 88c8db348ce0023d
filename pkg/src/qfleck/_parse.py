"""Tiny polynomial expression reader shared by the text formats.

Expressions are read into a bivariate dict ``{(e_var, e_z): coeff}`` where ``var`` is
the main indeterminate (``q`` or ``x``) and ``z`` stands for zeta_2c.  Python's own
expression grammar does the tokenizing; we only walk the resulting tree.
"""
from __future__ import annotations

import ast
import re

from .errors import PolyParseError

_IMPLICIT_MUL = re.compile(r"(?<=[0-9a-zA-Z)])(?=[a-zA-Z(])|(?<=\))(?=[0-9])")
_ALLOWED = re.compile(r"^[0-9a-zA-Z+\-*^()]*$")


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            key = (i1 + i2, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def parse_bivariate(text: str, var: str = "q", allow_z: bool = True) -> dict:
    src = "".join(text.split())
    if not src:
        raise PolyParseError("empty polynomial text")
    if not _ALLOWED.match(src):
        raise PolyParseError(f"unexpected characters in {text!r}")
    # juxtaposition ('2q^3', 'z(1+z)', ')(') reads as a product
    src = _IMPLICIT_MUL.sub("*", src)
    src = src.replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse {text!r}") from exc

    names = {var: {(1, 0): 1}}
    if allow_z:
        names["z"] = {(0, 1): 1}

    def walk(node) -> dict:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return {(0, 0): node.value} if node.value else {}
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise PolyParseError(f"unknown symbol {node.id!r} in {text!r}")
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            inner = walk(node.operand)
            return inner if isinstance(node.op, ast.UAdd) else {k: -v for k, v in inner.items()}
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise PolyParseError(f"exponents must be nonnegative integers in {text!r}")
                base = walk(node.left)
                out = {(0, 0): 1}
                for _ in range(exp.value):
                    out = _mul(out, base)
                return out
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return _add(left, right)
            if isinstance(node.op, ast.Sub):
                return _add(left, right, -1)
            if isinstance(node.op, ast.Mult):
                return _mul(left, right)
        raise PolyParseError(f"unsupported syntax in {text!r}")

    return walk(tree)
