"""
front_evolute.py
Dalga Cephesi (Front) Evolütleri
Legendre çatısı (ν, μ), eğrilik çifti (ℓ, β), n. evolüt zinciri
Ev^n = Ev^{n-1} - (β_{n-1}/ℓ) M^{n-1}(ν), β_n = d/dt(β_{n-1}/ℓ),
ve zincirin t=0'daki tekillik profili üzerine kurulan ölçütler.
"""

from dataclasses import dataclass, field

import jet_core
from jet_core import DEFAULT_TOL, FLOAT, LOW_ORDER_WINDOW, RATIONAL, CuspError, OrderExhaustedError, SqrtObstructionError
from plane_curve import CurveJet, deriv_vec, jet_det, jet_dot, rotate90_jet
from classifier import PreconditionError


class InflectionError(CuspError):
    """ℓ(0) = 0: cephe t=0'da büküm (inflection) noktasına sahip"""


class SingularFrameError(CuspError):
    """γ′ jet'i mertebe içinde tamamen sıfır; Legendre çatısı kurulamaz"""


@dataclass(frozen=True)
class LegendreFrame:
    """
    Birim normal ν ve μ = M(ν)

    γ′ = t^k u, ν = M(u)/‖u‖, dolayısıyla det(u(0), ν(0)) > 0.
    """

    nu: CurveJet
    mu: CurveJet
    k: int
    u: CurveJet
    speed: object  # ‖u‖ jet'i
    backend_used: str = RATIONAL


@dataclass(frozen=True)
class CurvaturePair:
    ell: object   # ℓ = ν′·μ
    beta: object  # β = γ′·μ


@dataclass(frozen=True)
class EvoluteLevel:
    index: int
    curve: CurveJet
    beta: object
    normal: CurveJet  # M^n(ν)
    singular_at_0: bool
    trusted_order: int


@dataclass
class EvoluteChain:
    """Ev⁰ = γ, Ev¹, ..., Ev^m seviyeleri ve ortak ℓ"""

    frame: LegendreFrame
    ell: object
    levels: list = field(default_factory=list)
    backend_used: str = RATIONAL

    def flags(self):
        return [level.singular_at_0 for level in self.levels]


def _frame_from_tangent(gp, k, backend):
    x = jet_core.unshift(gp.x, k)
    y = jet_core.unshift(gp.y, k)
    u = CurveJet(x, y)
    speed = jet_core.sqrt(jet_dot(u, u))
    nu = CurveJet(-u.y / speed, u.x / speed)
    return LegendreFrame(nu=nu, mu=rotate90_jet(nu), k=k, u=u, speed=speed, backend_used=backend)


def legendre_frame(c, tol=DEFAULT_TOL):
    """
    Eğrinin Legendre çatısı

    Rasyonel backend'de ‖u(0)‖² bir rasyonel kare değilse float'a geçilir
    (backend_used alanında raporlanır).

    Args:
        c (CurveJet): Eğri jet'i

    Returns:
        LegendreFrame: ν, μ, k, u
    """
    gp = c.derivative()
    k = gp.valuation(tol)
    if k == float('inf'):
        raise SingularFrameError(f"γ′ mertebe {gp.order} içinde sıfır")
    try:
        return _frame_from_tangent(gp, k, c.backend)
    except SqrtObstructionError:
        return _frame_from_tangent(gp.to_backend(FLOAT), k, FLOAT)


def curvature_pair(c, f):
    """
    ℓ = ν′·μ ve β = γ′·μ = t^k (u·μ)

    Returns:
        CurvaturePair: Ortak güvenilir mertebede jet'ler
    """
    ell = jet_dot(f.nu.derivative(), f.mu.truncate(f.mu.order - 1))
    beta = jet_core.shift(jet_dot(f.u, f.mu), f.k)
    return CurvaturePair(ell=ell, beta=beta)


def _is_singular(curve, tol):
    """t=0'da birinci türev vektörü sıfır mı"""
    if curve.order < 1:
        raise OrderExhaustedError("Tekillik testi için mertebe 1 gerekli")
    vec = deriv_vec(curve, 1)
    if curve.backend == RATIONAL:
        return vec.is_zero()
    return vec.is_zero(tol * curve.low_order_scale(start=1))


def _ell_vanishes(ell, tol):
    if ell.backend == RATIONAL:
        return ell[0] == 0
    return abs(ell[0]) <= tol * ell.low_order_scale()


def evolute_chain(c, m, tol=DEFAULT_TOL):
    """
    n. evolüt zinciri, n = 0..m

    Args:
        c (CurveJet): Büküm noktası olmayan cephe jet'i
        m (int): Evolüt sayısı

    Returns:
        EvoluteChain: Her seviyede eğri, β_n, M^n(ν), tekillik bayrağı, güvenilir mertebe
    """
    if m < 0:
        raise ValueError("m negatif olamaz")
    frame = legendre_frame(c, tol)
    c = c.to_backend(frame.backend_used)
    pair = curvature_pair(c, frame)
    ell = pair.ell
    if _ell_vanishes(ell, tol):
        raise InflectionError("ℓ(0) = 0; cephe t=0'da büküm noktasına sahip")

    final_order = ell.order - m
    if final_order < 2:
        raise OrderExhaustedError(
            f"{m} evolüt adımı sonrası güvenilir mertebe {final_order} < 2; jet mertebesini artırın"
        )

    chain = EvoluteChain(frame=frame, ell=ell, backend_used=frame.backend_used)
    curve, beta, normal = c, pair.beta, frame.nu
    for n in range(m + 1):
        trusted = min(curve.order, beta.order, ell.order)
        chain.levels.append(EvoluteLevel(
            index=n,
            curve=curve.truncate(trusted),
            beta=beta.truncate(trusted),
            normal=normal.truncate(min(trusted, normal.order)),
            singular_at_0=_is_singular(curve, tol),
            trusted_order=trusted,
        ))
        if n == m:
            break
        ratio = beta / ell
        curve = curve - normal.scaled(ratio)
        beta = jet_core.derivative(ratio)
        normal = rotate90_jet(normal)
    return chain


def negative_criterion(c, n, tol=DEFAULT_TOL, chain=None):
    """
    Ev¹..Ev^{n-1} t=0'da tekil ise γ, (n, n+1) sivri noktasına 𝒜-denk değildir

    Returns:
        bool: True = "𝒜-denk değil"
    """
    if n < 2:
        raise ValueError("n >= 2 olmalı")
    if chain is None:
        if not _is_singular(c, tol):
            raise PreconditionError("t=0 tekil nokta değil")
        chain = evolute_chain(c, n - 1, tol)
    if len(chain.levels) < n:
        raise OrderExhaustedError(f"Zincirde Ev^{n - 1} yok")
    return all(level.singular_at_0 for level in chain.levels[1:n])


def singularity_crosscheck(c, n, tol=DEFAULT_TOL):
    """
    γ^(i)(0) = 0 (i = 2..n+1) ⇔ Ev^i t=0'da tekil (i = 1..n)

    İki taraf bağımsız hesaplanır; eşleşip eşleşmedikleri döndürülür.
    """
    chain = evolute_chain(c, n, tol)
    exact = c.backend == RATIONAL
    scale = c.low_order_scale(start=1, stop=max(n + 1, LOW_ORDER_WINDOW))
    derivs_vanish = []
    for i in range(2, n + 2):
        vec = c.coefficient(i)
        derivs_vanish.append(vec.is_zero() if exact else vec.is_zero(tol * scale))
    left = all(derivs_vanish)
    right = all(level.singular_at_0 for level in chain.levels[1:n + 1])
    return left == right


def chain_curvature_check(chain, tol=DEFAULT_TOL):
    """
    Her seviyede (Ev^n, M^n ν) çiftinden (ℓ, β) yeniden hesapla

    Returns:
        list: Her seviye için (ℓ, β_n) ile uyuşma (bool)
    """
    results = []
    for level in chain.levels:
        mu_n = rotate90_jet(level.normal)
        ell_n = jet_dot(level.normal.derivative(), mu_n.truncate(mu_n.order - 1))
        beta_n = jet_dot(level.curve.derivative(), mu_n.truncate(mu_n.order - 1))
        order = min(ell_n.order, beta_n.order, level.trusted_order - 1)
        results.append(
            _close(ell_n.truncate(order), chain.ell.truncate(order), tol)
            and _close(beta_n.truncate(order), level.beta.truncate(order), tol)
        )
    return results


def _close(a, b, tol):
    if a.backend == RATIONAL and b.backend == RATIONAL:
        return a == b
    scale = max(1.0, float(a.max_abs()), float(b.max_abs()))
    return all(abs(float(p) - float(q)) <= tol * scale for p, q in zip(a.coeffs, b.coeffs))


def classical_evolute(c):
    """
    Düzenli germ için γ + (1/κ) n, κ = det(γ̇, γ̈)/‖γ̇‖³

    (1/κ) n = ‖γ̇‖² / det(γ̇, γ̈) · M(γ̇); karekök gerekmez.
    """
    gd = c.derivative()
    gdd = gd.derivative()
    if gd.coefficient(0).is_zero():
        raise PreconditionError("γ̇(0) = 0; klasik evolüt tanımsız")
    speed_sq = jet_dot(gd, gd)
    curl = jet_det(gd, gdd)
    if curl[0] == 0:
        raise InflectionError("det(γ̇, γ̈)(0) = 0; klasik evolüt tanımsız")
    return c + rotate90_jet(gd).scaled(speed_sq / curl)


def test_front_evolute():
    """(t^4, t^5) cephesinin evolüt zincirini yazdır"""
    print("\n" + "="*70)
    print("CEPHE EVOLÜT ZİNCİRİ TESTİ")
    print("="*70)

    c = CurveJet.from_terms({4: 1}, {5: 1}, 24)
    chain = evolute_chain(c, 3)
    print(f"\nk = {chain.frame.k}, backend = {chain.backend_used}")
    print(f"ℓ = {chain.ell.truncate(6)}")
    print(f"β = {chain.levels[0].beta.truncate(7)}")

    for level in chain.levels[1:]:
        print(f"\nEv^{level.index} (güvenilir mertebe {level.trusted_order}):")
        print(f"  x = {level.curve.x.truncate(8)}")
        print(f"  y = {level.curve.y.truncate(8)}")
        status = "tekil" if level.singular_at_0 else "düzenli"
        print(f"  t=0: {status}")

    print(f"\nNegatif ölçüt (n=4): {negative_criterion(c, 4, chain=chain)}")

    print("\n" + "="*70)
    print("✓ EVOLÜT ZİNCİRİ TEST EDİLDİ")
    print("="*70)
    print()


if __name__ == "__main__":
    test_front_evolute()
