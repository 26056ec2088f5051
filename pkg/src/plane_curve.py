"""
plane_curve.py
Düzlem Eğrisi Jet'leri ve Vektör Araçları
γ(t) = (x(t), y(t)) eğrisini iki jet olarak tutar; türev vektörleri, determinant,
M dönmesi (π/2), ifade ağacından jet üretimi ve çizim için nokta değerlendirmesi.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

import jet_core
from jet_core import FLOAT, RATIONAL, BackendMismatchError, Jet
from curve_expr import BinOp, Func, Neg, Num, Pow, Var, parse_curve

SERIES = {
    'sin': jet_core.sin_series,
    'cos': jet_core.cos_series,
    'exp': jet_core.exp_series,
}


@dataclass(frozen=True)
class PlaneVec:
    """Düzlemde bir vektör (u, v): γ^(k)(0), ν(0), μ(0) gibi değerler"""

    u: object
    v: object

    def norm_sq(self):
        return self.u * self.u + self.v * self.v

    def norm(self):
        return math.sqrt(float(self.norm_sq()))

    def is_zero(self, tol=0.0):
        return jet_core.is_zero(self.u, tol) and jet_core.is_zero(self.v, tol)

    def scaled(self, factor):
        return PlaneVec(self.u * factor, self.v * factor)

    def __add__(self, other):
        return PlaneVec(self.u + other.u, self.v + other.v)

    def __sub__(self, other):
        return PlaneVec(self.u - other.u, self.v - other.v)

    def __neg__(self):
        return PlaneVec(-self.u, -self.v)

    def as_tuple(self):
        return (self.u, self.v)


@dataclass(frozen=True)
class CurveJet:
    """
    Düzlem eğrisi germi: aynı backend ve aynı mertebede iki jet

    k. türev vektörü k! * (x_k, y_k) olarak elde edilir.
    """

    x: Jet
    y: Jet

    def __post_init__(self):
        if self.x.backend != self.y.backend:
            raise BackendMismatchError(f"Bileşen backend'leri farklı: {self.x.backend} / {self.y.backend}")
        if self.x.order != self.y.order:
            raise ValueError(f"Bileşen mertebeleri farklı: {self.x.order} / {self.y.order}")

    @classmethod
    def aligned(cls, x, y):
        """İki jet'i ortak (küçük) mertebeye keserek eğri oluştur"""
        n = min(x.order, y.order)
        return cls(x.truncate(n), y.truncate(n))

    @classmethod
    def from_terms(cls, x_terms, y_terms, order, backend=RATIONAL):
        """
        Üs -> katsayı sözlüklerinden eğri oluştur

        Örnek: from_terms({4: 1}, {5: 1, 7: 1}, 10) -> (t^4, t^5 + t^7)
        """
        def build(terms):
            coeffs = [0] * (order + 1)
            for power, coeff in terms.items():
                if power <= order:
                    coeffs[power] = coeff
            return Jet(tuple(coeffs), backend)
        return cls(build(x_terms), build(y_terms))

    @property
    def order(self):
        return self.x.order

    @property
    def backend(self):
        return self.x.backend

    def truncate(self, order):
        return CurveJet(self.x.truncate(order), self.y.truncate(order))

    def to_backend(self, backend):
        return CurveJet(self.x.to_backend(backend), self.y.to_backend(backend))

    def derivative(self):
        return CurveJet(jet_core.derivative(self.x), jet_core.derivative(self.y))

    def coefficient(self, k):
        """t^k katsayı vektörü (x_k, y_k)"""
        return PlaneVec(self.x[k], self.y[k])

    def max_abs(self):
        return max(self.x.max_abs(), self.y.max_abs())

    def low_order_scale(self, start=0, stop=jet_core.LOW_ORDER_WINDOW):
        head = max((abs(v) for k in range(start, min(stop, self.order) + 1) for v in (self.x[k], self.y[k])),
                   default=0)
        return head if head else self.max_abs()

    def valuation(self, tol=jet_core.DEFAULT_TOL):
        """İki bileşenin ortak valuation'ı"""
        if self.backend == RATIONAL:
            threshold = 0
        else:
            threshold = tol * self.low_order_scale()
        for k in range(self.order + 1):
            if abs(self.x[k]) > threshold or abs(self.y[k]) > threshold:
                return k
        return math.inf

    def scaled(self, factor):
        """Bileşenleri bir jet ya da skaler ile çarp"""
        return CurveJet.aligned(self.x * factor, self.y * factor)

    def __add__(self, other):
        return CurveJet.aligned(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return CurveJet.aligned(self.x - other.x, self.y - other.y)

    def __neg__(self):
        return CurveJet(-self.x, -self.y)

    def __str__(self):
        return f"x(t) = {self.x}\ny(t) = {self.y}"


# --- Vektör araçları ---

def deriv_vec(c, k):
    """
    γ^(k)(0) vektörü

    Args:
        c (CurveJet): Eğri jet'i
        k (int): Türev mertebesi (k <= c.order)

    Returns:
        PlaneVec: k! * (x_k, y_k)
    """
    factor = math.factorial(k)
    return PlaneVec(c.x[k] * factor, c.y[k] * factor)


def det2(p, q):
    """2x2 determinant det(p, q) = p.u*q.v - p.v*q.u"""
    return p.u * q.v - p.v * q.u


def dot(p, q):
    return p.u * q.u + p.v * q.v


def rotate90(p):
    """M: saat yönünün tersine π/2 dönme, (u, v) -> (-v, u)"""
    return PlaneVec(-p.v, p.u)


def jet_det(a, b):
    """Jet düzeyinde det(a(t), b(t))"""
    return a.x * b.y - a.y * b.x


def jet_dot(a, b):
    """Jet düzeyinde a(t)·b(t)"""
    return a.x * b.x + a.y * b.y


def rotate90_jet(c):
    """M katsayı bazında: (x, y) -> (-y, x)"""
    return CurveJet(-c.y, c.x)


# --- İfade ağacından jet ---

def _node_to_jet(node, order, backend, center):
    if isinstance(node, Num):
        return Jet.constant(node.value, order, backend)
    if isinstance(node, Var):
        return Jet.from_coeffs([center, 1], order, backend)
    if isinstance(node, Neg):
        return -_node_to_jet(node.operand, order, backend, center)
    if isinstance(node, Pow):
        return jet_core.power(_node_to_jet(node.base, order, backend, center), node.exponent)
    if isinstance(node, BinOp):
        left = _node_to_jet(node.left, order, backend, center)
        right = _node_to_jet(node.right, order, backend, center)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        return left * right
    if isinstance(node, Func):
        return _function_jet(node.name, _node_to_jet(node.arg, order, backend, center))
    raise TypeError(f"Desteklenmeyen ifade düğümü: {node!r}")


def _function_jet(name, arg):
    """f(c + h) açılımı, h = arg - c sabit terimi sıfır olan jet"""
    c0 = arg[0]
    h = arg - c0
    order = arg.order
    backend = arg.backend

    if c0 == 0:
        return jet_core.compose(SERIES[name](order, backend), h)
    if backend == RATIONAL:
        raise BackendMismatchError(
            f"{name}({c0}) rasyonel değil; sabit terimi sıfırdan farklı argüman için float backend gerekli"
        )

    # Toplam formülleri (float)
    sin_h = jet_core.compose(jet_core.sin_series(order, FLOAT), h)
    cos_h = jet_core.compose(jet_core.cos_series(order, FLOAT), h)
    if name == 'sin':
        return sin_h * math.cos(c0) + cos_h * math.sin(c0)
    if name == 'cos':
        return cos_h * math.cos(c0) - sin_h * math.sin(c0)
    return jet_core.compose(jet_core.exp_series(order, FLOAT), h) * math.exp(c0)


def to_jet(e, order, backend=RATIONAL, center=0):
    """
    İfade ağacının t = center noktasındaki Taylor jet'i

    Args:
        e (CurveExpr): Ayrıştırılmış eğri
        order (int): Jet mertebesi (>= 1)
        backend (str): 'rational' veya 'float'
        center (int | Fraction | float): Açılım noktası (varsayılan 0)

    Returns:
        CurveJet: (x, y) jet'leri; yerel parametre h = t - center
    """
    if order < 1:
        raise ValueError("Jet mertebesi en az 1 olmalı")
    if backend == RATIONAL:
        center = Fraction(center)
    else:
        center = float(center)
    x = _node_to_jet(e.x, order, backend, center)
    y = _node_to_jet(e.y, order, backend, center)
    return CurveJet.aligned(x, y)


def curve_from_text(x_text, y_text, order, backend=RATIONAL):
    """Metinden doğrudan eğri jet'i"""
    return to_jet(parse_curve(x_text, y_text), order, backend)


# --- Nokta değerlendirme (numpy) ---

def eval_node(node, t):
    """İfade ağacını numpy dizisi üzerinde değerlendir"""
    if isinstance(node, Num):
        return np.full_like(t, float(node.value), dtype=float)
    if isinstance(node, Var):
        return np.asarray(t, dtype=float)
    if isinstance(node, Neg):
        return -eval_node(node.operand, t)
    if isinstance(node, Pow):
        return eval_node(node.base, t) ** node.exponent
    if isinstance(node, BinOp):
        left = eval_node(node.left, t)
        right = eval_node(node.right, t)
        if node.op == '+':
            return left + right
        if node.op == '-':
            return left - right
        return left * right
    if isinstance(node, Func):
        return getattr(np, node.name)(eval_node(node.arg, t))
    raise TypeError(f"Desteklenmeyen ifade düğümü: {node!r}")


def eval_points(e, t_min, t_max, samples):
    """
    Eşit aralıklı parametrelerde eğri noktaları

    Args:
        e (CurveExpr): Eğri ifadesi
        t_min, t_max (float): Parametre aralığı
        samples (int): Örnek sayısı (>= 2)

    Returns:
        np.ndarray: (samples, 2) boyutlu koordinat dizisi
    """
    if samples < 2:
        raise ValueError("En az 2 örnek gerekli")
    t = np.linspace(float(t_min), float(t_max), samples)
    return np.column_stack([eval_node(e.x, t), eval_node(e.y, t)])


def test_plane_curve():
    """Düzlem eğrisi araçlarını test et"""
    print("\n" + "="*70)
    print("DÜZLEM EĞRİSİ JET TESTİ")
    print("="*70)

    cycloid = curve_from_text("t - sin(t)", "1 - cos(t)", 7)
    print("\nSikloid jet'i (mertebe 7):")
    print(cycloid)

    c = curve_from_text("t^4", "t^5 + t^7", 8)
    print("\n(t^4, t^5 + t^7) türev vektörleri:")
    for k in (4, 5, 7):
        vec = deriv_vec(c, k)
        print(f"  γ^({k})(0) = ({vec.u}, {vec.v})")
    print(f"  det(γ^(5), γ^(4)) = {det2(deriv_vec(c, 5), deriv_vec(c, 4))}")

    points = eval_points(parse_curve("t^4", "t^5"), -1, 1, 3)
    print("\n(t^4, t^5) üzerinde 3 nokta:")
    for px, py in points:
        print(f"  ({px:+.3f}, {py:+.3f})")

    print("\n" + "="*70)
    print("✓ DÜZLEM EĞRİSİ ARAÇLARI TEST EDİLDİ")
    print("="*70)
    print()


if __name__ == "__main__":
    test_plane_curve()
