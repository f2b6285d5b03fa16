"""
Parser for polynomial text such as "1/2*x^3 - (x+1)^2". The text is rewritten
(`^` becomes `**`) and handed to the `ast` module; a NodeVisitor then folds the
tree into an exact Poly over QQ. Offsets in errors refer to the original text.
"""
import ast
import logging
from fractions import Fraction
from typing import List

from src.algebra.fields import QQ
from src.algebra.poly import Poly
from src.core.exceptions import PolynomialSyntaxError

logger = logging.getLogger(__name__)

VARIABLE = "x"


class _OffsetMap:
    """Maps offsets in the rewritten text back to the original."""

    def __init__(self, original: str, lead: int) -> None:
        self.origin: List[int] = []
        for i, ch in enumerate(original):
            self.origin.extend([lead + i] * (2 if ch == "^" else 1))
        self.end = lead + len(original)

    def __call__(self, offset: int) -> int:
        if 0 <= offset < len(self.origin):
            return self.origin[offset]
        return self.end


class PolynomialVisitor(ast.NodeVisitor):
    """
    Folds an expression tree into a Poly. Only the variable x, integer
    literals, + - * / ^ and parentheses are accepted; division and exponents
    must be constant.
    """

    def __init__(self, offsets: _OffsetMap) -> None:
        self._offsets = offsets

    def _fail(self, node: ast.AST, message: str) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self._offsets(getattr(node, "col_offset", 0)))

    def _constant(self, node: ast.AST, value: Poly, what: str) -> Fraction:
        if not value.is_constant:
            raise self._fail(node, f"{what} must be a constant")
        return value[0]

    def visit_Expression(self, node: ast.Expression) -> Poly:
        return self.visit(node.body)

    def visit_Constant(self, node: ast.Constant) -> Poly:
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            kind = "floating-point literal" if isinstance(node.value, float) else f"literal {node.value!r}"
            raise self._fail(node, f"unsupported {kind}; use integers and /")
        return Poly.constant(node.value, QQ)

    def visit_Name(self, node: ast.Name) -> Poly:
        if node.id != VARIABLE:
            raise self._fail(node, f"unknown variable {node.id!r}")
        return Poly.x(QQ)

    def visit_UnaryOp(self, node: ast.UnaryOp) -> Poly:
        operand = self.visit(node.operand)
        if isinstance(node.op, ast.USub):
            return -operand
        if isinstance(node.op, ast.UAdd):
            return operand
        raise self._fail(node, f"unsupported operator {type(node.op).__name__}")

    def visit_BinOp(self, node: ast.BinOp) -> Poly:
        left, right = self.visit(node.left), self.visit(node.right)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            divisor = self._constant(node.right, right, "divisor")
            if divisor == 0:
                raise self._fail(node.right, "division by zero")
            return left.scale(1 / divisor)
        if isinstance(op, ast.Pow):
            exponent = self._constant(node.right, right, "exponent")
            if exponent.denominator != 1 or exponent < 0:
                raise self._fail(node.right, f"exponent must be a nonnegative integer, got {exponent}")
            return left ** int(exponent)
        raise self._fail(node, f"unsupported operator {type(op).__name__}")

    def generic_visit(self, node: ast.AST) -> Poly:
        raise self._fail(node, f"unsupported syntax {type(node).__name__}")


def parse_poly(text: str) -> Poly:
    """
    Parse polynomial text into an exact Poly over QQ.

    Raises:
        PolynomialSyntaxError: with the byte offset of the offending token.
    """
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if not stripped:
        raise PolynomialSyntaxError("empty polynomial", lead)
    if "**" in stripped:
        raise PolynomialSyntaxError("use ^ for powers", lead + stripped.index("**"))
    offsets = _OffsetMap(stripped, lead)
    source = stripped.replace("^", "**").replace("\n", " ").replace("\r", " ")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as e:
        raise PolynomialSyntaxError(f"invalid polynomial: {e.msg}", offsets((e.offset or 1) - 1)) from None
    poly = PolynomialVisitor(offsets).visit(tree)
    logger.debug(f"Parsed {text!r} as {poly}")
    return poly
