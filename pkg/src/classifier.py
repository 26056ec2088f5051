"""
classifier.py
Sivri Nokta (Cusp) Sınıflandırıcı
t=0 noktasındaki düzlem eğrisi germlerini determinant ölçütleriyle sınıflandırır:
(2,3), (2,5), (2,7), (3,4), (3,5), (2,n) ölçütleri, (4,5;±7) sivri eğriliği κ_q,
C¹ tipi (n, n+1), normal form T, Whitney ayrışımı ve difeomorfizma etkileri.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import jet_core
from jet_core import DEFAULT_TOL, LOW_ORDER_WINDOW, RATIONAL, CuspError, Jet, NotInvertibleError, OrderExhaustedError
from plane_curve import CurveJet, deriv_vec, det2, dot

# (4,5) ayrımı: -77 B^2 + 105 A D + 60 A C
NUMERATOR_WEIGHTS = (-77, 105, 60)
# Normal formdaki pay: pay = NORMAL_FORM_CONSTANT * T * scale^2
NORMAL_FORM_CONSTANT = 20901888000
# (2,n) ölçütünün denendiği en büyük tek n
DEFAULT_MAX_TWO_N = 13


class PreconditionError(CuspError):
    """Ölçütün ön koşulu sağlanmıyor (ör. düşük mertebeli türevler sıfır değil)"""


class CuspTag(Enum):
    REGULAR = 'RegularPoint'
    CUSP23 = 'Cusp23'
    CUSP25 = 'Cusp25'
    CUSP27 = 'Cusp27'
    CUSP2N = 'Cusp2N'
    CUSP34 = 'Cusp34'
    CUSP35 = 'Cusp35'
    CUSP45_ZERO = 'Cusp45Zero'
    CUSP45_PLUS = 'Cusp45Plus'
    CUSP45_MINUS = 'Cusp45Minus'
    C1_ONLY = 'C1Only'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class CuspClass:
    """
    Sınıflandırma sonucu

    Cusp2N(n) yalnızca yeterli ölçütün sağlandığını söyler; C1Only(n) yalnızca
    (n, n+1) sivri noktasına C¹-denkliği iddia eder.
    """

    tag: CuspTag
    n: int = None
    reason: str = None

    @property
    def name(self):
        return self.tag.value

    @property
    def sufficient_only(self):
        return self.tag == CuspTag.CUSP2N

    def same_class(self, other):
        return self.tag == other.tag and self.n == other.n

    def __str__(self):
        if self.tag == CuspTag.INCONCLUSIVE:
            return f"Inconclusive({self.reason})"
        if self.n is not None:
            return f"{self.name}({self.n})"
        return self.name


@dataclass
class Condition:
    """Denetlenen tek bir ölçüt ve hesaplanan tam değerleri"""

    name: str
    passed: bool
    values: dict = field(default_factory=dict)


@dataclass
class Witness:
    """
    Sınıflandırmanın tanığı: okunan türev vektörleri ve tüm determinantlar

    A = det(γ⁵, γ⁴), B = det(γ⁶, γ⁴), C = det(γ⁷, γ⁴), D = det(γ⁶, γ⁵)
    """

    n: int = None
    derivs: dict = field(default_factory=dict)
    A: object = None
    B: object = None
    C: object = None
    D: object = None
    numerator: object = None
    kappa_q: float = None
    kappa_q_sq: object = None
    T: object = None
    scale: object = None
    conditions: list = field(default_factory=list)


class _Probe:
    """Eğrinin türev vektörlerini okur, önbelleğe alır ve sıfır testlerini yapar"""

    def __init__(self, c, tol=DEFAULT_TOL, derivs=None):
        self.curve = c
        self.tol = tol
        self.exact = c.backend == RATIONAL
        self.derivs = {} if derivs is None else derivs
        self.scales = {}

    def scale(self, k):
        """γ^(k) testinin ölçeği: 1..max(k, pencere) mertebelerindeki katsayılar"""
        if k not in self.scales:
            self.scales[k] = self.curve.low_order_scale(start=1, stop=max(k, LOW_ORDER_WINDOW))
        return self.scales[k]

    def d(self, k):
        if k not in self.derivs:
            self.derivs[k] = deriv_vec(self.curve, k)
        return self.derivs[k]

    def vanishes(self, k):
        """γ^(k)(0) = 0? (float: ham katsayı vektörü için göreli eşik)"""
        vec = self.d(k)
        if self.exact:
            return vec.u == 0 and vec.v == 0
        threshold = self.tol * self.scale(k) * math.factorial(k)
        return abs(vec.u) <= threshold and abs(vec.v) <= threshold

    def det_zero(self, value, p, q):
        if self.exact:
            return value == 0
        return abs(value) <= self.tol * p.norm() * q.norm()

    def first_nonzero(self, start=1):
        """γ^(k)(0) ≠ 0 olan en küçük k >= start"""
        for k in range(start, self.curve.order + 1):
            if not self.vanishes(k):
                return k
        raise OrderExhaustedError(f"Mertebe {self.curve.order} içinde tüm türevler sıfır")


def _probe(c, tol):
    return c if isinstance(c, _Probe) else _Probe(c, tol)


def _ratio(value, denom):
    if isinstance(value, Fraction) and isinstance(denom, Fraction):
        return value / denom
    return float(value) / float(denom)


# --- (2,*) ve (3,*) ölçütleri ---

def check_cusp23(c, tol=DEFAULT_TOL):
    """γ′(0) = 0 ve det(γ″, γ‴) ≠ 0"""
    p = _probe(c, tol)
    value = det2(p.d(2), p.d(3))
    passed = p.vanishes(1) and not p.vanishes(2) and not p.det_zero(value, p.d(2), p.d(3))
    return Condition('cusp23', passed, {'det(g2,g3)': value})


def check_cusp25(c, tol=DEFAULT_TOL):
    """det(γ″, γ‴) = 0 ve 3 det(γ″, γ⁵) γ″ - 10 det(γ″, γ⁴) γ‴ ≠ 0"""
    p = _probe(c, tol)
    g2, g3, g4, g5 = p.d(2), p.d(3), p.d(4), p.d(5)
    d23 = det2(g2, g3)
    d25 = det2(g2, g5)
    d24 = det2(g2, g4)
    vec = g2.scaled(3 * d25) - g3.scaled(10 * d24)
    if p.exact:
        vec_zero = vec.is_zero()
    else:
        vec_zero = vec.norm() <= p.tol * g2.norm() * (3 * g2.norm() * g5.norm() + 10 * g3.norm() * g4.norm())
    passed = p.vanishes(1) and not p.vanishes(2) and p.det_zero(d23, g2, g3) and not vec_zero
    return Condition('cusp25', passed, {
        'det(g2,g3)': d23, 'det(g2,g5)': d25, 'det(g2,g4)': d24, 'vector': vec.as_tuple(),
    })


def check_cusp27(c, tol=DEFAULT_TOL):
    """
    γ‴ = kγ″, γ⁵ - (10/3)kγ⁴ = lγ″ ve
    det(γ″, γ⁷ - 7kγ⁶ - (7l - (70/3)k³)γ⁴) ≠ 0
    """
    p = _probe(c, tol)
    g2, g3, g4, g5, g6, g7 = (p.d(k) for k in range(2, 8))
    values = {}
    if not p.vanishes(1) or p.vanishes(2):
        return Condition('cusp27', False, values)

    norm2 = g2.norm_sq()
    if not p.det_zero(det2(g2, g3), g2, g3):
        return Condition('cusp27', False, {'det(g2,g3)': det2(g2, g3)})
    k = _ratio(dot(g3, g2), norm2)
    values['k'] = k

    w = g5 - g4.scaled(k * Fraction(10, 3) if p.exact else k * 10.0 / 3.0)
    if not p.det_zero(det2(g2, w), g2, w):
        values['det(g2,w)'] = det2(g2, w)
        return Condition('cusp27', False, values)
    l = _ratio(dot(w, g2), norm2)
    values['l'] = l

    if p.exact:
        coeff4 = 7 * l - Fraction(70, 3) * k ** 3
    else:
        coeff4 = 7 * l - 70.0 / 3.0 * k ** 3
    z = g7 - g6.scaled(7 * k) - g4.scaled(coeff4)
    value = det2(g2, z)
    values['det(g2,z)'] = value
    return Condition('cusp27', not p.det_zero(value, g2, z), values)


def check_cusp2n(c, n, tol=DEFAULT_TOL):
    """
    (2,n) yeterli ölçütü, n >= 9 tek:
    γ‴ = ... = γ^(n-1) = 0 ve det(γ″, γ^(n)) ≠ 0
    """
    if n < 9 or n % 2 == 0:
        raise ValueError("n, 9'dan büyük ya da eşit tek sayı olmalı")
    p = _probe(c, tol)
    gn = p.d(n)
    if not p.vanishes(1) or p.vanishes(2):
        return Condition(f'cusp2n({n})', False, {})
    middle_zero = all(p.vanishes(j) for j in range(3, n))
    value = det2(p.d(2), gn)
    passed = middle_zero and not p.det_zero(value, p.d(2), gn)
    return Condition(f'cusp2n({n})', passed, {'middle_zero': middle_zero, f'det(g2,g{n})': value})


def check_cusp34(c, tol=DEFAULT_TOL):
    """γ′ = γ″ = 0 ve det(γ‴, γ⁴) ≠ 0"""
    p = _probe(c, tol)
    value = det2(p.d(3), p.d(4))
    passed = p.vanishes(1) and p.vanishes(2) and not p.det_zero(value, p.d(3), p.d(4))
    return Condition('cusp34', passed, {'det(g3,g4)': value})


def check_cusp35(c, tol=DEFAULT_TOL):
    """γ′ = γ″ = 0, det(γ‴, γ⁴) = 0 ve det(γ‴, γ⁵) ≠ 0"""
    p = _probe(c, tol)
    g3, g4, g5 = p.d(3), p.d(4), p.d(5)
    d34 = det2(g3, g4)
    d35 = det2(g3, g5)
    passed = (p.vanishes(1) and p.vanishes(2) and not p.vanishes(3)
              and p.det_zero(d34, g3, g4) and not p.det_zero(d35, g3, g5))
    return Condition('cusp35', passed, {'det(g3,g4)': d34, 'det(g3,g5)': d35})


def cusp_conditions(c, tol=DEFAULT_TOL):
    """
    Eğriye uygulanabilen tüm (2,*) / (3,*) ölçütlerini kısa devre yapmadan değerlendir

    Mertebesi yetmeyen ölçütler listeye alınmaz.
    """
    p = _probe(c, tol)
    checks = [check_cusp23, check_cusp25, check_cusp27, check_cusp34, check_cusp35]
    results = []
    for check in checks:
        try:
            results.append(check(p))
        except OrderExhaustedError:
            continue
    return results


# --- (4,5) değişmezleri ---

def invariant_quadruple(c, weights=NUMERATOR_WEIGHTS, tol=DEFAULT_TOL):
    """
    A, B, C, D ve pay -77B² + 105AD + 60AC

    Args:
        c (CurveJet): γ′(0) = γ″(0) = γ‴(0) = 0 olan eğri, mertebe >= 7
        weights (tuple): Payın katsayıları (negatif kontrol için değiştirilebilir)

    Returns:
        Witness: A, B, C, D, numerator, kappa_q (float), kappa_q_sq
    """
    p = _probe(c, tol)
    if p.curve.order < 7:
        raise OrderExhaustedError(f"(4,5) değişmezleri için mertebe 7 gerekli, jet mertebesi {p.curve.order}")
    for k in (1, 2, 3):
        if not p.vanishes(k):
            raise PreconditionError(f"γ^({k})(0) sıfır değil; (4,5) değişmezleri tanımsız")

    g4, g5, g6, g7 = (p.d(k) for k in range(4, 8))
    w_b, w_ad, w_ac = weights
    witness = Witness(derivs=p.derivs)
    try:
        witness.n = p.first_nonzero()
    except OrderExhaustedError:
        witness.n = None
    witness.A = det2(g5, g4)
    witness.B = det2(g6, g4)
    witness.C = det2(g7, g4)
    witness.D = det2(g6, g5)
    witness.numerator = (w_b * witness.B ** 2 + w_ad * witness.A * witness.D
                         + w_ac * witness.A * witness.C)

    norm_sq = g4.norm_sq()
    if norm_sq != 0:
        witness.kappa_q = float(witness.numerator) / math.sqrt(float(norm_sq)) ** 5
        witness.kappa_q_sq = witness.numerator ** 2 / norm_sq ** 5
    return witness


def quadruple_from_division(c):
    """
    A, B, C, D'nin γ = t⁴ (z, w) bölümü üzerinden hesabı

    A = 2880 (w z′ - z w′), B = 8640 (w z″ - z w″),
    C = 20160 (w z‴ - z w‴), D = 43200 (w′ z″ - z′ w″), hepsi t=0'da
    """
    if c.order < 7:
        raise OrderExhaustedError("Bölüm formülü için mertebe 7 gerekli")
    z = jet_core.unshift(c.x, 4)
    w = jet_core.unshift(c.y, 4)
    z0, z1, z2, z3 = z[0], z[1], 2 * z[2], 6 * z[3]
    w0, w1, w2, w3 = w[0], w[1], 2 * w[2], 6 * w[3]
    return (
        2880 * (w0 * z1 - z0 * w1),
        8640 * (w0 * z2 - z0 * w2),
        20160 * (w0 * z3 - z0 * w3),
        43200 * (w1 * z2 - z1 * w2),
    )


def kappa_q(c, tol=DEFAULT_TOL):
    """(4,5;±7) sivri eğriliği: pay / ‖γ⁴(0)‖⁵ (float)"""
    witness = invariant_quadruple(c, tol=tol)
    if witness.kappa_q is None:
        raise PreconditionError("γ⁴(0) = 0; κ_q tanımsız")
    return witness.kappa_q


def kappa_q_squared(c):
    """Tam rasyonel κ_q² = pay² / ‖γ⁴(0)‖¹⁰"""
    witness = invariant_quadruple(c)
    if witness.kappa_q_sq is None:
        raise PreconditionError("γ⁴(0) = 0; κ_q tanımsız")
    return witness.kappa_q_sq


def numerator_is_zero(witness, tol=DEFAULT_TOL):
    """Payın sıfır testi (float: terimlerin büyüklüğüne göre göreli)"""
    if isinstance(witness.numerator, Fraction):
        return witness.numerator == 0
    magnitude = (77 * witness.B ** 2 + 105 * abs(witness.A * witness.D)
                 + 60 * abs(witness.A * witness.C))
    return abs(witness.numerator) <= tol * magnitude


# --- C¹ tipi ve normal form ---

def c1_type(c, tol=DEFAULT_TOL):
    """
    İlk sıfırdan farklı türev mertebesi n ve det(γ^(n)(0), γ^(n+1)(0))

    Determinant sıfırdan farklı ise eğri C¹ anlamında (n, n+1) sivri noktasına denktir.
    """
    p = _probe(c, tol)
    if not p.vanishes(1):
        raise PreconditionError("γ′(0) ≠ 0; nokta tekil değil")
    n = p.first_nonzero(2)
    if n + 1 > c.order:
        raise OrderExhaustedError(f"det(γ^({n}), γ^({n + 1})) için mertebe {n + 1} gerekli")
    return n, det2(p.d(n), p.d(n + 1))


def _linear_normalize(c, n):
    """[a_n | a_{n+1}]^-1 ile ön terimleri (t^n, t^{n+1}) yap"""
    a_n = c.coefficient(n)
    a_m = c.coefficient(n + 1)
    scale = det2(a_n, a_m)
    x = (c.x * a_m.v - c.y * a_m.u) / scale
    y = (c.y * a_n.u - c.x * a_n.v) / scale
    return CurveJet(x, y), scale


def normal_form_chain(c, tol=DEFAULT_TOL):
    """
    Eğriyi (s^n, s^{n+1} + T s^{n+3}) + ... biçimine indir

    Adımlar: doğrusal dönüşüm, τ(t) = t + c₁t² + c₂t³, kayma (shear),
    φ(s) = s - (ã_{n+3}/n) s⁴.

    Returns:
        tuple: (CurveJet indirgenmiş eğri, T, scale = det(a_n, a_{n+1}))
    """
    n, c1_det = c1_type(c, tol)
    p = _probe(c, tol)
    if p.det_zero(c1_det, p.d(n), p.d(n + 1)):
        raise PreconditionError(f"det(γ^({n}), γ^({n + 1})) = 0; (n, n+1) tipi değil")
    if c.order < n + 3:
        raise OrderExhaustedError(f"Normal form için mertebe {n + 3} gerekli")

    # 1. Doğrusal dönüşüm
    reduced, scale = _linear_normalize(c, n)
    a_hat = reduced.x[n + 2]
    b_hat = reduced.y[n + 2]

    # 2. Parametre değişimi τ
    c1 = -b_hat / (n + 1)
    c2 = -(a_hat + n * (n - 1) * b_hat ** 2 / (2 * (n + 1) ** 2)) / n
    tau = Jet.from_coeffs([0, 1, c1, c2], c.order, c.backend)
    reduced = apply_reparam(reduced, tau)

    # 3. Kayma (x, y) -> (x + n/(n+1) b̂ y, y)
    shear = b_hat * n / (n + 1)
    reduced = CurveJet(reduced.x + reduced.y * shear, reduced.y)

    # 4. Dördüncü derece değişim φ
    a_tilde = reduced.x[n + 3]
    phi = Jet.from_coeffs([0, 1, 0, 0, -a_tilde / n], c.order, c.backend)
    reduced = apply_reparam(reduced, phi)

    return reduced, reduced.y[n + 3], scale


def normal_form_T(c, tol=DEFAULT_TOL):
    """Normal formdaki t^{n+3} katsayısı T"""
    return normal_form_chain(c, tol)[1]


def eliminate_order_eleven(c):
    """
    (s⁴, s⁵) + O(s⁸) jet'inin 11. mertebe katsayılarını sıfırla

    φ(s) = s - (b̃₁₁/5) s⁷ - (ã₁₁/4) s⁸

    Returns:
        tuple: (CurveJet, φ)
    """
    if c.order < 11:
        raise OrderExhaustedError("11. mertebe için jet mertebesi yetersiz")
    head_x = [c.x[k] for k in range(8)]
    head_y = [c.y[k] for k in range(8)]
    if head_x != [0, 0, 0, 0, 1, 0, 0, 0] or head_y != [0, 0, 0, 0, 0, 1, 0, 0]:
        raise PreconditionError("Eğri (s⁴, s⁵) + O(s⁸) biçiminde değil")
    a11 = c.x[11]
    b11 = c.y[11]
    coeffs = [0, 1, 0, 0, 0, 0, 0, -b11 / 5, -a11 / 4]
    phi = Jet.from_coeffs(coeffs, c.order, c.backend)
    return apply_reparam(c, phi), phi


def semigroup_lift(c):
    """
    (s⁴, s⁵) + M(s) için Ψ = id + ψ düzlem dönüşümü, Ψ(s⁴, s⁵) = c

    M, 7. mertebeye kadar ve 11. mertebede sıfır olmalı; kalan her üs ⟨4, 5⟩
    yarı grubundadır. ψ, Whitney ayrışımı (k = 2) ile kurulur:
    t^{4a} = X^a, t^{4a+1} = Y X^{a-1}, t^{4a+2} = Y² X^{a-2}, t^{4a+3} = Y³ X^{a-3}.
    """
    base = CurveJet.from_terms({4: 1}, {5: 1}, c.order, c.backend)
    remainder = c - base
    components = []
    for comp in (remainder.x, remainder.y):
        if any(comp[k] != 0 for k in range(min(8, comp.order + 1))) or (comp.order >= 11 and comp[11] != 0):
            raise PreconditionError("Kalan terimler 7. mertebeye kadar ve 11. mertebede sıfır olmalı")
        terms = {}
        for residue, part in enumerate(whitney_split(comp, 2)):
            # t^{4a + residue} = Y^residue X^(a - residue)
            for a in range(part.order + 1):
                if part[a] != 0:
                    terms[(a - residue, residue)] = part[a]
        components.append(terms)

    first = {(1, 0): 1, **components[0]}
    second = {(0, 1): 1, **components[1]}
    return PlanePolyMap(first, second)


def whitney_split(a, k):
    """
    f(t) = Σ_{l=1}^{2^k} t^{l-1} g_l(t^{2^k}) ayrışımı

    Args:
        a (Jet): Ayrıştırılacak jet
        k (int): 2^k parça

    Returns:
        list: g_1..g_{2^k}, u = t^{2^k} değişkeninde jet'ler
    """
    if k < 0:
        raise ValueError("k negatif olamaz")
    step = 2 ** k
    if step > a.order:
        raise OrderExhaustedError(f"2^{k} = {step} jet mertebesi {a.order}'den büyük")
    parts = []
    for l in range(step):
        coeffs = a.coeffs[l::step]
        parts.append(Jet(coeffs, a.backend))
    return parts


def whitney_combine(parts, k):
    """Ayrışımı geri birleştir: Σ t^{l-1} g_l(t^{2^k})"""
    step = 2 ** k
    order = min(step * (g.order + 1) + l for l, g in enumerate(parts)) - 1
    coeffs = [0] * (order + 1)
    for l, g in enumerate(parts):
        for j, value in enumerate(g.coeffs):
            index = step * j + l
            if index <= order:
                coeffs[index] = value
    return Jet(tuple(coeffs), parts[0].backend)


# --- Difeomorfizma etkileri ---

@dataclass(frozen=True)
class PlanePolyMap:
    """
    Düzlemde polinom dönüşüm Φ = (Φ₁, Φ₂)

    Her bileşen {(i, j): katsayı} sözlüğüdür: Σ katsayı * x^i * y^j.
    Sabit terim sıfır, orijindeki Jacobian determinantı sıfırdan farklı olmalı.
    """

    first: dict
    second: dict

    def __post_init__(self):
        for comp in (self.first, self.second):
            if comp.get((0, 0), 0) != 0:
                raise ValueError("Düzlem dönüşümünün sabit terimi sıfır olmalı")
        if self.jacobian_det() == 0:
            raise NotInvertibleError("Orijinde Jacobian tekil; dönüşüm difeomorfizma değil")

    @classmethod
    def identity(cls):
        return cls({(1, 0): 1}, {(0, 1): 1})

    @classmethod
    def linear(cls, a, b, c, d):
        """(x, y) -> (a x + b y, c x + d y)"""
        return cls({(1, 0): a, (0, 1): b}, {(1, 0): c, (0, 1): d})

    @classmethod
    def shear(cls, s):
        """(x, y) -> (x + s y, y)"""
        return cls.linear(1, s, 0, 1)

    def jacobian_det(self):
        return (self.first.get((1, 0), 0) * self.second.get((0, 1), 0)
                - self.first.get((0, 1), 0) * self.second.get((1, 0), 0))

    def __call__(self, x, y):
        return (_apply_poly(self.first, x, y), _apply_poly(self.second, x, y))


def _apply_poly(terms, x, y):
    if isinstance(x, Jet):
        result = Jet.zero(x.order, x.backend)
    else:
        result = 0
    for (i, j), coeff in sorted(terms.items()):
        if coeff == 0:
            continue
        if isinstance(x, Jet):
            result = result + jet_core.power(x, i) * jet_core.power(y, j) * coeff
        else:
            result = result + coeff * x ** i * y ** j
    return result


def apply_reparam(c, psi):
    """
    Parametre değişimi: γ(ψ(t))

    Args:
        c (CurveJet): Eğri
        psi (Jet): ψ(0) = 0, ψ′(0) ≠ 0 olan jet

    Returns:
        CurveJet: Bileşen bazında bileşke
    """
    if psi[0] != 0:
        raise NotInvertibleError("ψ(0) = 0 olmalı")
    if psi[1] == 0:
        raise NotInvertibleError("ψ′(0) = 0; parametre değişimi difeomorfizma değil")
    return CurveJet.aligned(jet_core.compose(c.x, psi), jet_core.compose(c.y, psi))


def apply_plane_map(c, phi):
    """Düzlem dönüşümünü eğriye uygula (mertebe korunur)"""
    x, y = phi(c.x, c.y)
    return CurveJet.aligned(x, y)


# --- Sınıflandırıcı ---

def _inconclusive(witness, reason):
    return CuspClass(CuspTag.INCONCLUSIVE, reason=reason), witness


def _classify_two(p, witness, max_two_n):
    for check, tag in ((check_cusp23, CuspTag.CUSP23),
                       (check_cusp25, CuspTag.CUSP25),
                       (check_cusp27, CuspTag.CUSP27)):
        try:
            cond = check(p)
        except OrderExhaustedError as e:
            return _inconclusive(witness, f"{tag.value} ölçütü için mertebe yetersiz ({e})")
        witness.conditions.append(cond)
        if cond.passed:
            return CuspClass(tag), witness

    # (2,n) yeterli ölçütü, n = 9, 11, ...
    for n in range(9, max_two_n + 1, 2):
        try:
            cond = check_cusp2n(p, n)
        except OrderExhaustedError:
            return _inconclusive(witness, f"(2,{n}) ölçütü için mertebe {n} gerekli")
        witness.conditions.append(cond)
        if cond.passed:
            return CuspClass(CuspTag.CUSP2N, n=n), witness
        if not cond.values.get('middle_zero', False):
            return _inconclusive(witness, "(2,3)/(2,5)/(2,7) başarısız, (2,n) ölçütü uygulanamaz")
    return _inconclusive(witness, f"(2,n) ölçütü n <= {max_two_n} için sağlanmadı")


def _classify_three(p, witness):
    for check, tag in ((check_cusp34, CuspTag.CUSP34), (check_cusp35, CuspTag.CUSP35)):
        try:
            cond = check(p)
        except OrderExhaustedError as e:
            return _inconclusive(witness, f"{tag.value} ölçütü için mertebe yetersiz ({e})")
        witness.conditions.append(cond)
        if cond.passed:
            return CuspClass(tag), witness
    return _inconclusive(witness, "(3,4) ve (3,5) ölçütleri sağlanmadı")


def _classify_four(p, witness):
    c = p.curve
    if c.order < 7:
        return _inconclusive(witness, "(4,5) ayrımı için mertebe 7 gerekli")
    quad = invariant_quadruple(p)
    for name in ('A', 'B', 'C', 'D', 'numerator', 'kappa_q', 'kappa_q_sq'):
        setattr(witness, name, getattr(quad, name))

    a_zero = p.det_zero(quad.A, p.d(5), p.d(4))
    witness.conditions.append(Condition('cusp45', not a_zero, {
        'A': quad.A, 'B': quad.B, 'C': quad.C, 'D': quad.D, 'numerator': quad.numerator,
    }))
    if a_zero:
        return _inconclusive(witness, "m=4 ve A = det(γ⁵, γ⁴) = 0; ölçüt yok")

    _, witness.T, witness.scale = normal_form_chain(c, p.tol)
    if numerator_is_zero(quad, p.tol):
        return CuspClass(CuspTag.CUSP45_ZERO), witness
    if quad.numerator > 0:
        return CuspClass(CuspTag.CUSP45_PLUS), witness
    return CuspClass(CuspTag.CUSP45_MINUS), witness


def _classify_higher(p, witness, m):
    try:
        value = det2(p.d(m), p.d(m + 1))
    except OrderExhaustedError:
        return _inconclusive(witness, f"C¹ ölçütü için mertebe {m + 1} gerekli")
    passed = not p.det_zero(value, p.d(m), p.d(m + 1))
    witness.conditions.append(Condition('c1', passed, {f'det(g{m},g{m + 1})': value}))
    if passed:
        return CuspClass(CuspTag.C1_ONLY, n=m), witness
    return _inconclusive(witness, f"det(γ^({m}), γ^({m + 1})) = 0; C¹ ölçütü sağlanmadı")


def classify(c, max_two_n=DEFAULT_MAX_TWO_N, tol=DEFAULT_TOL):
    """
    t=0 noktasını sınıflandır

    Args:
        c (CurveJet): Eğri jet'i
        max_two_n (int): (2,n) ölçütünde denenecek en büyük tek n
        tol (float): Float backend için göreli sıfır toleransı

    Returns:
        tuple: (CuspClass, Witness)
    """
    p = _Probe(c, tol)
    witness = Witness(derivs=p.derivs)

    try:
        m = p.first_nonzero()
    except OrderExhaustedError as e:
        return _inconclusive(witness, str(e))
    witness.n = m

    if m == 1:
        return CuspClass(CuspTag.REGULAR), witness
    if m == 2:
        return _classify_two(p, witness, max_two_n)
    if m == 3:
        return _classify_three(p, witness)
    if m == 4:
        return _classify_four(p, witness)
    return _classify_higher(p, witness, m)


def test_classifier():
    """Sınıflandırıcıyı örnek eğriler üzerinde test et"""
    print("\n" + "="*70)
    print("SİVRİ NOKTA SINIFLANDIRICI TESTİ")
    print("="*70)

    examples = [
        ({2: 1}, {3: 1}),
        ({2: 1}, {5: 1}),
        ({3: 1}, {4: 1}),
        ({4: 1}, {5: 1}),
        ({4: 1}, {5: 1, 7: 1}),
        ({4: 1}, {5: 1, 7: -1}),
        ({5: 1}, {6: 1}),
    ]
    for x_terms, y_terms in examples:
        c = CurveJet.from_terms(x_terms, y_terms, 16)
        cusp, witness = classify(c)
        print(f"\n  x = {c.x}\n  y = {c.y}")
        print(f"  -> {cusp}")
        if witness.numerator is not None:
            print(f"     pay = {witness.numerator}, κ_q = {witness.kappa_q:.4f}, T = {witness.T}")

    print("\n" + "="*70)
    print("✓ SINIFLANDIRICI TEST EDİLDİ")
    print("="*70)
    print()


if __name__ == "__main__":
    test_classifier()
