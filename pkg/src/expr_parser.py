"""
Polynomial expressions and group-specification files.

Grammar (whitespace insensitive, no implicit multiplication):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := var | int | int '/' int | 'zeta(' nat ')' ('^' int)?
            | '(' expr ')' | '-' atom
"""

import json
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple, Union

from cyclotomic import CycNum, ONE, root_of_unity
from group import GroupSpec, TorusWeights
from poly import LinearMap, Poly, VarTable


MAX_EXPONENT = 1000
MAX_ROOT_ORDER = 360
MAX_NESTING = 200
MAX_LITERAL_DIGITS = 1000

Span = Tuple[int, int]


class ParseError(ValueError):
    """A positioned diagnostic; `kind` names the failure class."""

    def __init__(self, kind: str, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.kind = kind
        self.message = message
        self.line = line
        self.column = column


class SpecFileError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Tokens
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    line: int
    column: int


_DIGITS = "0123456789"
_IDENT_START = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_"
_IDENT_CHARS = _IDENT_START + _DIGITS
_OPERATORS = "+-*/^()"


def tokenize(src: str) -> List[Token]:
    tokens = []
    line, column, i = 1, 1, 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line, column, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            column, i = column + 1, i + 1
            continue
        start = i
        if ch in _DIGITS:
            while i < len(src) and src[i] in _DIGITS:
                i += 1
            if i - start > MAX_LITERAL_DIGITS:
                raise ParseError("syntax", f"numeric literal longer than {MAX_LITERAL_DIGITS} digits", line, column)
            tokens.append(Token("num", src[start:i], line, column))
        elif ch in _IDENT_START:
            while i < len(src) and src[i] in _IDENT_CHARS:
                i += 1
            tokens.append(Token("ident", src[start:i], line, column))
        elif ch in _OPERATORS:
            i += 1
            tokens.append(Token("op", ch, line, column))
        else:
            raise ParseError("syntax", f"unexpected character {ch!r}", line, column)
        column += i - start
    tokens.append(Token("end", "", line, column))
    return tokens


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VarRef:
    name: str
    span: Span


@dataclass(frozen=True)
class IntLit:
    value: int
    span: Span


@dataclass(frozen=True)
class RatLit:
    numerator: int
    denominator: int
    span: Span


@dataclass(frozen=True)
class RootLit:
    order: int
    power: int
    span: Span


@dataclass(frozen=True)
class Neg:
    operand: Any
    span: Span


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[str, Any], ...]  # (sign, node)
    span: Span


@dataclass(frozen=True)
class Product:
    factors: Tuple[Any, ...]
    span: Span


@dataclass(frozen=True)
class Power:
    base: Any
    exponent: int
    span: Span


ExprAST = Union[VarRef, IntLit, RatLit, RootLit, Neg, Sum, Product, Power]


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.position = 0
        self.depth = 0

    def peek(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        if token.kind != "end":
            self.position += 1
        return token

    def at_op(self, text: str) -> bool:
        token = self.peek()
        return token.kind == "op" and token.text == text

    def fail(self, kind: str, message: str, token: Optional[Token] = None):
        token = token or self.peek()
        raise ParseError(kind, message, token.line, token.column)

    def expect_op(self, text: str) -> Token:
        if not self.at_op(text):
            found = self.peek().text or "end of input"
            self.fail("syntax", f"expected '{text}', found {found!r}")
        return self.advance()

    def expect_number(self, kind: str, what: str) -> Token:
        if self.peek().kind != "num":
            found = self.peek().text or "end of input"
            self.fail(kind, f"expected {what}, found {found!r}")
        return self.advance()

    def parse(self) -> ExprAST:
        node = self.expr()
        if self.peek().kind != "end":
            self.fail("syntax", f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> ExprAST:
        start = self.peek()
        terms = [("+", self.term())]
        while self.at_op("+") or self.at_op("-"):
            sign = self.advance().text
            terms.append((sign, self.term()))
        if len(terms) == 1:
            return terms[0][1]
        return Sum(tuple(terms), (start.line, start.column))

    def term(self) -> ExprAST:
        start = self.peek()
        factors = [self.factor()]
        while self.at_op("*"):
            self.advance()
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors), (start.line, start.column))

    def factor(self) -> ExprAST:
        start = self.peek()
        node = self.atom()
        if self.at_op("^"):
            self.advance()
            exponent = self.expect_number("malformed-exponent", "a natural exponent")
            value = int(exponent.text)
            if value > MAX_EXPONENT:
                self.fail("malformed-exponent", f"exponent {value} exceeds {MAX_EXPONENT}", exponent)
            node = Power(node, value, (start.line, start.column))
        return node

    def atom(self) -> ExprAST:
        token = self.peek()
        span = (token.line, token.column)
        if token.kind == "num":
            self.advance()
            if self.at_op("/"):
                self.advance()
                denominator = self.expect_number("syntax", "a denominator")
                if int(denominator.text) == 0:
                    self.fail("division-by-zero", "division by zero in rational literal", denominator)
                return RatLit(int(token.text), int(denominator.text), span)
            return IntLit(int(token.text), span)
        if token.kind == "ident" and token.text == "zeta":
            return self.root_literal()
        if token.kind == "ident":
            self.advance()
            return VarRef(token.text, span)
        if self.at_op("(") or self.at_op("-"):
            self.depth += 1
            if self.depth > MAX_NESTING:
                self.fail("syntax", f"nesting deeper than {MAX_NESTING}")
            self.advance()
            if token.text == "(":
                node = self.expr()
                self.expect_op(")")
            else:
                node = Neg(self.atom(), span)
            self.depth -= 1
            return node
        found = token.text or "end of input"
        self.fail("syntax", f"unexpected {found!r}")

    def root_literal(self) -> RootLit:
        token = self.advance()
        self.expect_op("(")
        order_token = self.expect_number("invalid-root", "a root-of-unity order")
        order = int(order_token.text)
        if not 1 <= order <= MAX_ROOT_ORDER:
            self.fail("invalid-root", f"root-of-unity order must be in 1..{MAX_ROOT_ORDER}", order_token)
        self.expect_op(")")
        power = 1
        if self.at_op("^"):
            self.advance()
            negative = False
            if self.at_op("-"):
                self.advance()
                negative = True
            exponent = self.expect_number("malformed-exponent", "an integer exponent")
            power = -int(exponent.text) if negative else int(exponent.text)
        return RootLit(order, power, (token.line, token.column))


def parse_expr(src: str) -> ExprAST:
    return _Parser(src).parse()


def lower(node: ExprAST, table: VarTable) -> Poly:
    """Expand an AST into a canonical Poly over `table`."""
    if isinstance(node, VarRef):
        try:
            return Poly.variable(table, node.name)
        except KeyError:
            raise ParseError("unknown-variable", f"unknown variable {node.name!r}", *node.span) from None
    if isinstance(node, IntLit):
        return Poly.constant(table, node.value)
    if isinstance(node, RatLit):
        return Poly.constant(table, CycNum.rational(node.numerator) / node.denominator)
    if isinstance(node, RootLit):
        return Poly.constant(table, root_of_unity(node.power, node.order))
    if isinstance(node, Neg):
        return -lower(node.operand, table)
    if isinstance(node, Sum):
        result = Poly.zero(table)
        for sign, term in node.terms:
            value = lower(term, table)
            result = result + value if sign == "+" else result - value
        return result
    if isinstance(node, Product):
        result = Poly.constant(table, ONE)
        for factor in node.factors:
            result = result * lower(factor, table)
        return result
    if isinstance(node, Power):
        return lower(node.base, table) ** node.exponent
    raise TypeError(f"unknown expression node {node!r}")


def parse_poly(src: str, table: VarTable) -> Poly:
    """
    Parse an expression into a Poly.

    Raises:
        ParseError: With line/column for syntax errors, unknown variables,
            malformed exponents and zero denominators
    """
    return lower(parse_expr(src), table)


EMPTY_TABLE = VarTable((), ())


def parse_constant(src: str) -> CycNum:
    """Parse a variable-free expression such as '-zeta(3)^2' or '1/2'."""
    p = parse_poly(src, EMPTY_TABLE)
    return p.coefficient(())


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def _monomial_text(names: Sequence[str], monomial) -> str:
    return "*".join(name if e == 1 else f"{name}^{e}" for name, e in zip(names, monomial) if e)


def print_poly(p: Poly) -> str:
    """
    Canonical text: terms in descending graded-lex order, rational
    coefficients inline, other coefficients parenthesized.
    """
    if p.is_zero():
        return "0"
    names = p.table.names
    pieces = []
    for monomial, coefficient in p.items():
        body = _monomial_text(names, monomial)
        if coefficient.is_rational():
            q = coefficient.as_fraction()
            sign, magnitude = ("-" if q < 0 else "+"), abs(q)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                # '-' atom binds tighter than '^', so "-x^2" would read as (-x)^2
                first_factor = body.split("*")[0]
                text = f"1*{body}" if sign == "-" and not pieces and "^" in first_factor else body
            else:
                text = f"{magnitude}*{body}"
        else:
            sign = "+"
            text = f"({coefficient})" + (f"*{body}" if body else "")
        pieces.append((sign, text))
    first_sign, first_text = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_text
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out


# ---------------------------------------------------------------------------
# Spec files
# ---------------------------------------------------------------------------

@dataclass
class LoadedSpec:
    group: GroupSpec
    h_basis: List[Poly]
    cyclotomic_order: int
    labels: List[str] = field(default_factory=list)


def _field_contains(order: int, sub_order: int) -> bool:
    """Q(zeta_sub) is a subfield of Q(zeta_order)."""
    return order % sub_order == 0 or (order % 2 == 1 and (2 * order) % sub_order == 0)


def _require(data: dict, key: str, where: str):
    if key not in data:
        raise SpecFileError(f"{where}: missing key '{key}'")
    return data[key]


def _parse_in(where: str, parse, src: str):
    try:
        return parse(src)
    except ParseError as exc:
        raise SpecFileError(f"{where}: {exc}") from exc


def _parse_variables(entries, where: str) -> VarTable:
    if not isinstance(entries, list) or not entries:
        raise SpecFileError(f"{where}: expected a nonempty list of variables")
    pairs = []
    for k, entry in enumerate(entries):
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise SpecFileError(f"{where}[{k}]: expected {{name, conjugate?}}")
        conjugate = entry.get("conjugate")
        if conjugate is not None and not isinstance(conjugate, str):
            raise SpecFileError(f"{where}[{k}].conjugate: expected a name")
        pairs.append((entry["name"], conjugate))
    try:
        table = VarTable.build(pairs)
    except ValueError as exc:
        raise SpecFileError(f"{where}: {exc}") from exc
    if "zeta" in table.names:
        raise SpecFileError(f"{where}: 'zeta' is reserved for roots of unity")
    return table


def _parse_linear(entry, table: VarTable, order: int, where: str) -> LinearMap:
    rows = _require(entry, "matrix", where)
    n = len(table)
    if not isinstance(rows, list) or len(rows) != n or any(
            not isinstance(row, list) or len(row) != n for row in rows):
        raise SpecFileError(f"{where}.matrix: expected {n} rows of {n} entries")
    parsed = []
    for i, row in enumerate(rows):
        parsed_row = []
        for j, value in enumerate(row):
            spot = f"{where}.matrix[{i}][{j}]"
            if isinstance(value, bool) or not isinstance(value, (int, str)):
                raise SpecFileError(f"{spot}: expected an integer or an expression string")
            number = CycNum.rational(value) if isinstance(value, int) else _parse_in(spot, parse_constant, value)
            if not _field_contains(order, number.order):
                raise SpecFileError(f"{spot}: {number} lies outside Q(zeta_{order})")
            parsed_row.append(number)
        parsed.append(parsed_row)
    return LinearMap.from_rows(table, parsed)


def _parse_torus(entry, table: VarTable, where: str) -> TorusWeights:
    weights = _require(entry, "weights", where)
    if not isinstance(weights, list) or not weights:
        raise SpecFileError(f"{where}.weights: expected integer lists")
    rows = weights if isinstance(weights[0], list) else [weights]
    for row in rows:
        if not isinstance(row, list) or any(isinstance(w, bool) or not isinstance(w, int) for w in row):
            raise SpecFileError(f"{where}.weights: expected integer lists")
    try:
        return TorusWeights(table, tuple(tuple(row) for row in rows))
    except ValueError as exc:
        raise SpecFileError(f"{where}.weights: {exc}") from exc


def _parse_generator(entry, table: VarTable, order: int, where: str):
    if not isinstance(entry, dict):
        raise SpecFileError(f"{where}: expected an object with a 'type'")
    kind = entry.get("type")
    if kind == "linear":
        return _parse_linear(entry, table, order, where)
    if kind == "torus":
        return _parse_torus(entry, table, where)
    raise SpecFileError(f"{where}.type: expected 'linear' or 'torus', got {kind!r}")


def parse_spec_document(data: dict) -> LoadedSpec:
    """Turn a decoded spec document into group data and the H basis."""
    if not isinstance(data, dict):
        raise SpecFileError("spec: expected a JSON object")
    order = _require(data, "cyclotomic_order", "spec")
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise SpecFileError("spec.cyclotomic_order: expected a positive integer")
    table = _parse_variables(_require(data, "variables", "spec"), "spec.variables")

    generators = _require(data, "h_generators", "spec")
    if not isinstance(generators, list):
        raise SpecFileError("spec.h_generators: expected a list")
    h_generators = tuple(_parse_generator(entry, table, order, f"spec.h_generators[{k}]")
                         for k, entry in enumerate(generators))

    delta_entry = _require(data, "delta", "spec")
    if not isinstance(delta_entry, dict) or delta_entry.get("type", "linear") != "linear":
        raise SpecFileError("spec.delta: expected a linear map")
    delta = _parse_linear(delta_entry, table, order, "spec.delta")

    m = _require(data, "m", "spec")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise SpecFileError("spec.m: expected a positive integer")
    if not _field_contains(order, m):
        raise SpecFileError(f"spec.m: zeta_{m} lies outside Q(zeta_{order})")
    power = data.get("sigma_delta_power", 1)
    if isinstance(power, bool) or not isinstance(power, int):
        raise SpecFileError("spec.sigma_delta_power: expected an integer")

    basis_src = _require(data, "h_basis", "spec")
    if not isinstance(basis_src, list) or any(not isinstance(s, str) for s in basis_src):
        raise SpecFileError("spec.h_basis: expected a list of expression strings")
    h_basis = [_parse_in(f"spec.h_basis[{k}]", lambda s: parse_poly(s, table), src)
               for k, src in enumerate(basis_src)]

    group = GroupSpec(table, h_generators, delta, m, power)
    labels = [f"u{k + 1}" for k in range(len(h_basis))]
    return LoadedSpec(group, h_basis, order, labels)


def load_spec_file(path: str) -> LoadedSpec:
    """
    Read a JSON spec file.

    Raises:
        SpecFileError: On unreadable files, invalid JSON or bad structure
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecFileError(f"{path}: {exc}") from exc
    return parse_spec_document(data)
