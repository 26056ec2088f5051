"""
jet_core.py
Kesilmiş Taylor Serileri (Jet) Aritmetiği
t=0 noktasındaki tek değişkenli jet'ler üzerinde tam (rasyonel) ve kayan noktalı hesap.
Bu modül bağımsız çalışmaz, diğer tüm modüller tarafından kütüphane olarak kullanılır.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

RATIONAL = 'rational'
FLOAT = 'float'
BACKENDS = (RATIONAL, FLOAT)

# Kayan nokta sıfır toleransı (düşük mertebe katsayılarına göre göreli)
DEFAULT_TOL = 1e-9

# Sıfır testlerinin ölçeği bu mertebeye kadarki katsayılardan alınır
LOW_ORDER_WINDOW = 8


class CuspError(Exception):
    """Tüm matematiksel hataların kök sınıfı"""


class BackendMismatchError(CuspError):
    """Rasyonel ve kayan noktalı değerler aynı hesapta karıştı"""


class NotInvertibleError(CuspError):
    """Jet halkasında tersi olmayan eleman (sabit terim sıfır)"""


class SqrtObstructionError(CuspError):
    """Rasyonel backend'de sabit terim bir rasyonel sayının karesi değil"""


class OrderExhaustedError(CuspError):
    """İstenen mertebe jet'in güvenilir mertebesini aşıyor"""


def make_scalar(value, backend):
    """
    Bir sayıyı seçilen backend'in skalerine çevir

    Args:
        value (int | Fraction | float | str): Değer
        backend (str): 'rational' veya 'float'

    Returns:
        Fraction | float: Skaler
    """
    if backend == RATIONAL:
        if isinstance(value, float):
            raise BackendMismatchError(f"Rasyonel jet içine float değer verildi: {value}")
        return Fraction(value)
    if backend == FLOAT:
        return float(value)
    raise ValueError(f"Bilinmeyen backend: {backend}")


def is_zero(value, tol=0.0):
    """Skaler sıfır mı? (Fraction için tam karşılaştırma, float için mutlak tolerans)"""
    if isinstance(value, Fraction):
        return value == 0
    return abs(value) <= tol


def scalar_sqrt(value, backend):
    """
    Pozitif bir skalerin karekökü

    Rasyonel backend'de yalnızca tam kare rasyoneller kabul edilir.
    """
    if value <= 0:
        raise NotInvertibleError(f"Karekök için sabit terim pozitif olmalı: {value}")
    if backend == FLOAT:
        return math.sqrt(value)

    value = Fraction(value)
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root != value.numerator or den_root * den_root != value.denominator:
        raise SqrtObstructionError(
            f"{value} bir rasyonel sayının karesi değil, float backend gerekli"
        )
    return Fraction(num_root, den_root)


@dataclass(frozen=True)
class Jet:
    """
    t=0 noktasında kesilmiş Taylor serisi

    coeffs[k], t^k katsayısıdır; k. türev k! * coeffs[k] olur.
    order = len(coeffs) - 1, katsayıların güvenilir olduğu en yüksek mertebedir.
    """

    coeffs: tuple
    backend: str = RATIONAL

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"Bilinmeyen backend: {self.backend}")
        if len(self.coeffs) == 0:
            raise ValueError("Jet en az bir katsayı içermeli")
        converted = tuple(make_scalar(c, self.backend) for c in self.coeffs)
        object.__setattr__(self, 'coeffs', converted)

    # --- Kurucular ---

    @classmethod
    def zero(cls, order, backend=RATIONAL):
        return cls((0,) * (order + 1), backend)

    @classmethod
    def constant(cls, value, order, backend=RATIONAL):
        return cls((value,) + (0,) * order, backend)

    @classmethod
    def variable(cls, order, backend=RATIONAL):
        """t değişkeninin kendisi"""
        return cls.monomial(1, 1, order, backend)

    @classmethod
    def monomial(cls, power, coeff, order, backend=RATIONAL):
        coeffs = [0] * (order + 1)
        if power <= order:
            coeffs[power] = coeff
        return cls(tuple(coeffs), backend)

    @classmethod
    def from_coeffs(cls, coeffs, order, backend=RATIONAL):
        """Katsayı listesini verilen mertebeye kes ya da sıfırla doldur"""
        coeffs = list(coeffs)[:order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(tuple(coeffs), backend)

    # --- Temel erişim ---

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        if k > self.order:
            raise OrderExhaustedError(f"Katsayı {k} istendi, jet mertebesi {self.order}")
        return self.coeffs[k]

    def truncate(self, order):
        if order > self.order:
            raise OrderExhaustedError(f"Mertebe {self.order} -> {order} yükseltilemez")
        return Jet(self.coeffs[:order + 1], self.backend)

    def to_backend(self, backend):
        if backend == self.backend:
            return self
        if backend == FLOAT:
            return Jet(tuple(float(c) for c in self.coeffs), FLOAT)
        raise BackendMismatchError("Float jet rasyonel backend'e geri çevrilemez")

    def max_abs(self):
        return max(abs(c) for c in self.coeffs)

    def low_order_scale(self, start=0, stop=LOW_ORDER_WINDOW):
        """
        start..stop katsayılarının en büyük büyüklüğü; hepsi sıfırsa tüm jet

        Yüksek mertebe katsayıları geometrik büyüyebilir, bu yüzden t=0
        civarındaki sıfır testleri bu ölçeği kullanır.
        """
        head = max((abs(c) for c in self.coeffs[start:stop + 1]), default=0)
        return head if head else self.max_abs()

    def vanishes(self, tol=DEFAULT_TOL):
        return valuation(self, tol) == math.inf

    # --- Operatörler ---

    def _coerce(self, other):
        if isinstance(other, Jet):
            _check_backend(self, other)
            return other
        return Jet.constant(other, self.order, self.backend)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return Jet(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), self.backend)

    __radd__ = __add__

    def __neg__(self):
        return Jet(tuple(-c for c in self.coeffs), self.backend)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Jet):
            return mul(self, other)
        factor = make_scalar(other, self.backend)
        return Jet(tuple(c * factor for c in self.coeffs), self.backend)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return div(self, other)
        factor = make_scalar(other, self.backend)
        if factor == 0:
            raise NotInvertibleError("Sıfıra bölme")
        return Jet(tuple(c / factor for c in self.coeffs), self.backend)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.order + 1})"


def _check_backend(a, b):
    if a.backend != b.backend:
        raise BackendMismatchError(f"Backend uyuşmazlığı: {a.backend} / {b.backend}")


def mul(a, b):
    """
    Jet çarpımı (mertebede kesilmiş Cauchy çarpımı)

    Args:
        a (Jet): Sol çarpan
        b (Jet): Sağ çarpan

    Returns:
        Jet: Mertebesi min(order(a), order(b)) olan çarpım
    """
    _check_backend(a, b)
    n = min(a.order, b.order)
    zero = make_scalar(0, a.backend)
    out = []
    for k in range(n + 1):
        total = zero
        for i in range(k + 1):
            total += a.coeffs[i] * b.coeffs[k - i]
        out.append(total)
    return Jet(tuple(out), a.backend)


def div(a, b):
    """
    Jet bölümü a / b

    b'nin sabit terimi sıfır olmamalı (halkanın birimi).
    """
    _check_backend(a, b)
    if b.coeffs[0] == 0:
        raise NotInvertibleError("Sabit terimi sıfır olan jet'e bölünemez")

    n = min(a.order, b.order)
    b0 = b.coeffs[0]
    out = []
    for k in range(n + 1):
        total = a.coeffs[k]
        for i in range(1, k + 1):
            total -= b.coeffs[i] * out[k - i]
        out.append(total / b0)
    return Jet(tuple(out), a.backend)


def sqrt(a):
    """
    Jet karekökü, sonucun sabit terimi pozitif

    Rasyonel backend'de sabit terim rasyonel bir kare olmalı,
    aksi halde SqrtObstructionError fırlatılır (çağıran float'a geçer).
    """
    b0 = scalar_sqrt(a.coeffs[0], a.backend)
    out = [b0]
    for k in range(1, a.order + 1):
        total = a.coeffs[k]
        for i in range(1, k):
            total -= out[i] * out[k - i]
        out.append(total / (2 * b0))
    return Jet(tuple(out), a.backend)


def power(a, n):
    """a^n, n negatif olmayan tam sayı (ikili üs alma)"""
    if n < 0:
        raise ValueError("Üs negatif olamaz")
    result = Jet.constant(1, a.order, a.backend)
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def derivative(a):
    """d/dt, sonuç mertebesi bir azalır"""
    if a.order < 1:
        raise OrderExhaustedError("Mertebesi 0 olan jet'in türevi güvenilir değil")
    return Jet(tuple((k + 1) * a.coeffs[k + 1] for k in range(a.order)), a.backend)


def valuation(a, tol=DEFAULT_TOL):
    """
    Sıfırdan farklı ilk katsayının indisi

    Rasyonel backend'de tolerans yok sayılır. Float backend'de eşik,
    tol * (ilk mertebelerdeki en büyük katsayı büyüklüğü) olarak alınır.

    Returns:
        int | float: İndis, hepsi sıfırsa math.inf
    """
    if a.backend == RATIONAL:
        threshold = 0
    else:
        threshold = tol * a.low_order_scale()
    for k, c in enumerate(a.coeffs):
        if abs(c) > threshold:
            return k
    return math.inf


def compose(f, g):
    """
    Jet bileşkesi f(g(t)), g(0) = 0 olmalı

    Horner şeması ile hesaplanır; katsayılar Faà di Bruno toplamıyla aynıdır.
    Sonuç mertebesi min(order(g), v*(order(f)+1) - 1), v = g'nin valuation'ı.
    """
    _check_backend(f, g)
    if g.coeffs[0] != 0:
        raise NotInvertibleError("İç jet'in sabit terimi sıfır olmalı")

    v = next((k for k in range(1, g.order + 1) if g.coeffs[k] != 0), None)
    if v is None:
        return Jet.constant(f.coeffs[0], g.order, f.backend)

    order = min(g.order, v * (f.order + 1) - 1)
    inner = g.truncate(order)
    result = Jet.constant(f.coeffs[f.order], order, f.backend)
    for k in range(f.order - 1, -1, -1):
        result = mul(result, inner) + f.coeffs[k]
    return result


def shift(a, k):
    """t^k ile çarp; mertebe k artar"""
    return Jet((0,) * k + a.coeffs, a.backend)


def unshift(a, k, tol=DEFAULT_TOL):
    """
    t^k ile tam bölme; ilk k katsayı sıfır olmalı, mertebe k azalır
    """
    if k > a.order:
        raise OrderExhaustedError(f"t^{k} ile bölmek için mertebe {a.order} yetersiz")
    if valuation(a, tol) < k:
        raise NotInvertibleError(f"Jet t^{k} ile bölünemiyor")
    return Jet(a.coeffs[k:], a.backend)


def evaluate(a, t):
    """Kesilmiş polinomu t noktasında değerlendir (Horner)"""
    total = 0
    for c in reversed(a.coeffs):
        total = total * t + c
    return total


def exp_series(order, backend=RATIONAL):
    """exp(u) Maclaurin jet'i: 1/k!"""
    coeffs = tuple(Fraction(1, math.factorial(k)) for k in range(order + 1))
    return Jet(coeffs, RATIONAL).to_backend(backend)


def sin_series(order, backend=RATIONAL):
    """sin(u) Maclaurin jet'i"""
    coeffs = []
    for k in range(order + 1):
        if k % 2 == 1:
            sign = -1 if (k // 2) % 2 else 1
            coeffs.append(Fraction(sign, math.factorial(k)))
        else:
            coeffs.append(Fraction(0))
    return Jet(tuple(coeffs), RATIONAL).to_backend(backend)


def cos_series(order, backend=RATIONAL):
    """cos(u) Maclaurin jet'i"""
    coeffs = []
    for k in range(order + 1):
        if k % 2 == 0:
            sign = -1 if (k // 2) % 2 else 1
            coeffs.append(Fraction(sign, math.factorial(k)))
        else:
            coeffs.append(Fraction(0))
    return Jet(tuple(coeffs), RATIONAL).to_backend(backend)
