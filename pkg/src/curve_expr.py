"""
curve_expr.py
Eğri İfadesi Ayrıştırıcı (Recursive Descent)
CLI'dan gelen "t^4", "t - sin(t)" gibi metinleri sözdizim ağacına (AST) çevirir.

Dilbilgisi:
    expr     := term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' UINT)?
    base     := RATIONAL | 't' | '(' expr ')' | ('sin'|'cos'|'exp') '(' expr ')' | '-' base
    RATIONAL := INT ('/' UINT)?
"""

from dataclasses import dataclass
from fractions import Fraction

from jet_core import CuspError

FUNCTIONS = ('sin', 'cos', 'exp')


class ParseError(CuspError):
    """Ayrıştırma hatası: konum ve beklenen token listesi ile"""

    def __init__(self, position, expected, found, text=''):
        self.position = position
        self.expected = list(expected)
        self.found = found
        self.text = text
        super().__init__(
            f"konum {position}: beklenen {' | '.join(self.expected)}, bulunan {found!r}"
        )


# --- Sözdizim ağacı düğümleri ---

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Func:
    name: str  # 'sin', 'cos', 'exp'
    arg: object


@dataclass(frozen=True)
class CurveExpr:
    """İki ifadeden oluşan düzlem eğrisi (x(t), y(t))"""
    x: object
    y: object
    x_text: str = ''
    y_text: str = ''


class Token:
    """Tek bir sözcük birimi ve metindeki konumu"""

    def __init__(self, kind, text, position):
        self.kind = kind  # 'int', 'name', 'op', 'eof'
        self.text = text
        self.position = position

    def __repr__(self):
        return f"({self.kind}, {self.text!r}, {self.position})"


def tokenize(text):
    """
    Metni token listesine ayır

    Args:
        text (str): Girdi ifadesi

    Returns:
        list: Token listesi ('eof' ile biter)
    """
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token('int', text[start:i], start))
        elif ch.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            tokens.append(Token('name', text[start:i], start))
        elif ch in '+-*^/()':
            tokens.append(Token('op', ch, i))
            i += 1
        else:
            raise ParseError(i, ['sayı', 't', 'sin', 'cos', 'exp', '(', '-'], ch, text)
    tokens.append(Token('eof', '', len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected):
        tok = self.current
        found = tok.text if tok.kind != 'eof' else '<son>'
        raise ParseError(tok.position, expected, found, self.text)

    def expect_op(self, symbol):
        if self.current.kind == 'op' and self.current.text == symbol:
            return self.advance()
        self.fail([symbol])

    def parse(self):
        node = self.expr()
        if self.current.kind != 'eof':
            self.fail(['+', '-', '*', '^', '<son>'])
        return node

    def expr(self):
        node = self.term()
        while self.current.kind == 'op' and self.current.text in '+-':
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.current.kind == 'op' and self.current.text == '*':
            self.advance()
            node = BinOp('*', node, self.factor())
        return node

    def factor(self):
        node = self.base()
        if self.current.kind == 'op' and self.current.text == '^':
            self.advance()
            if self.current.kind != 'int':
                self.fail(['negatif olmayan tam sayı'])
            node = Pow(node, int(self.advance().text))
        return node

    def base(self):
        tok = self.current

        # 1. Rasyonel sabit: INT ('/' UINT)?
        if tok.kind == 'int':
            self.advance()
            value = Fraction(int(tok.text))
            if self.current.kind == 'op' and self.current.text == '/':
                self.advance()
                if self.current.kind != 'int':
                    self.fail(['payda (pozitif tam sayı)'])
                den_tok = self.advance()
                if int(den_tok.text) == 0:
                    raise ParseError(den_tok.position, ['sıfırdan farklı payda'], den_tok.text, self.text)
                value = Fraction(int(tok.text), int(den_tok.text))
            return Num(value)

        # 2. Değişken ve fonksiyonlar
        if tok.kind == 'name':
            if tok.text == 't':
                self.advance()
                return Var()
            if tok.text in FUNCTIONS:
                self.advance()
                self.expect_op('(')
                arg = self.expr()
                self.expect_op(')')
                return Func(tok.text, arg)
            self.fail(['t', 'sin', 'cos', 'exp'])

        # 3. Parantez ve tekli eksi
        if tok.kind == 'op' and tok.text == '(':
            self.advance()
            node = self.expr()
            self.expect_op(')')
            return node
        if tok.kind == 'op' and tok.text == '-':
            self.advance()
            return Neg(self.base())

        self.fail(['sayı', 't', 'sin', 'cos', 'exp', '(', '-'])


def parse_expr(text):
    """Tek bir ifadeyi ayrıştır"""
    return _Parser(text).parse()


def parse_curve(x_text, y_text):
    """
    İki ifadeyi eğri olarak ayrıştır

    Args:
        x_text (str): x(t) ifadesi
        y_text (str): y(t) ifadesi

    Returns:
        CurveExpr: Ayrıştırılmış eğri
    """
    return CurveExpr(parse_expr(x_text), parse_expr(y_text), x_text, y_text)


def is_polynomial(node):
    """Ağaç sin/cos/exp içermiyor mu?"""
    if isinstance(node, Func):
        return False
    if isinstance(node, (Num, Var)):
        return True
    if isinstance(node, Neg):
        return is_polynomial(node.operand)
    if isinstance(node, Pow):
        return is_polynomial(node.base)
    return is_polynomial(node.left) and is_polynomial(node.right)
