"""
curve_plot.py
Eğri ve Evolüt Çizimi (SVG)
γ ve Ev¹..Ev^m eğrilerini tek bir SVG dosyasına çizer. Her örnek noktada eğri
o noktanın etrafında yeniden açılır ve evolüt zinciri yerel olarak hesaplanır;
yerel çatı kurulamazsa orijindeki jet kullanılır (geçerlilik uyarısı ile).
"""

import os

import matplotlib
matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

import jet_core
from jet_core import DEFAULT_TOL, FLOAT, RATIONAL, CuspError
from plane_curve import eval_node, eval_points, to_jet
from front_evolute import evolute_chain

# Seviye renkleri: γ kırmızı, sonra yeşil, mavi, turuncu, mor, gri
LEVEL_COLORS = ['#e74c3c', '#2ecc71', '#3498db', '#f39c12', '#9b59b6', '#95a5a6']

MARGIN = 0.05


def level_label(n):
    return "γ" if n == 0 else f"Ev^{n}(γ)"


def _local_levels(expr, t0, m, tol):
    """t0 etrafında açılan float jet'in evolüt noktaları ve ℓ(t0)"""
    local = to_jet(expr, m + 4, FLOAT, center=t0)
    chain = evolute_chain(local, m, tol)
    points = [(level.curve.x[0], level.curve.y[0]) for level in chain.levels]
    return points, chain.ell[0]


class EvolutePlotter:
    """
    Bir eğri ifadesinin evolütlerini örnekler ve SVG olarak kaydeder
    Uyarılar (büküm noktası geçişi, jet geri dönüşü) self.warnings içinde toplanır.
    """

    def __init__(self, expr, m, t_range=(-1.0, 1.0), samples=400, order=24,
                 backend=RATIONAL, tol=DEFAULT_TOL, origin_chain=None):
        if samples < 2:
            raise ValueError("En az 2 örnek gerekli")
        self.expr = expr
        self.m = m
        self.t_min, self.t_max = float(t_range[0]), float(t_range[1])
        self.samples = samples
        self.order = order
        self.backend = backend
        self.tol = tol
        self.warnings = []
        self._origin_chain = origin_chain
        self.backend_used = origin_chain.backend_used if origin_chain is not None else backend

    def origin_chain(self):
        """t=0'daki evolüt zinciri (geri dönüş için, ilk ihtiyaçta hesaplanır)"""
        if self._origin_chain is None:
            try:
                jet = to_jet(self.expr, self.order, self.backend)
            except jet_core.BackendMismatchError:
                jet = to_jet(self.expr, self.order, FLOAT)
            self._origin_chain = evolute_chain(jet, self.m, self.tol)
            self.backend_used = self._origin_chain.backend_used
        return self._origin_chain

    def sample_levels(self):
        """
        Tüm seviyeleri örnekle

        Returns:
            list: Her seviye için (samples, 2) boyutlu numpy dizisi
        """
        t_values = np.linspace(self.t_min, self.t_max, self.samples)
        levels = [eval_points(self.expr, self.t_min, self.t_max, self.samples)]
        if self.m == 0:
            return levels

        evolutes = np.full((self.m, self.samples, 2), np.nan)
        ells = np.full(self.samples, np.nan)
        fallback = 0
        for i, t0 in enumerate(t_values):
            try:
                points, ell0 = _local_levels(self.expr, float(t0), self.m, self.tol)
                ells[i] = ell0
            except CuspError:
                fallback += 1
                chain = self.origin_chain()
                points = [(jet_core.evaluate(level.curve.x.to_backend(FLOAT), t0),
                           jet_core.evaluate(level.curve.y.to_backend(FLOAT), t0))
                          for level in chain.levels]
            for n in range(1, self.m + 1):
                evolutes[n - 1, i] = points[n]

        if fallback:
            self.warnings.append(
                f"{fallback} örnekte yerel çatı kurulamadı; t=0 jet'i kullanıldı "
                f"(yalnızca t=0 yakınında geçerli)"
            )
        finite = ells[np.isfinite(ells)]
        if finite.size and (np.any(finite == 0) or (finite.min() < 0 < finite.max())):
            self.warnings.append("ℓ çizim aralığında işaret değiştiriyor; büküm noktası var, evolütler orada ıraksar")

        levels.extend(evolutes[n] for n in range(self.m))
        return levels

    def plot(self, out_path):
        """
        SVG dosyasını oluştur

        Returns:
            dict: Çizim özeti (dosya, seviye sayısı, uyarılar, backend)
        """
        levels = self.sample_levels()

        fig, ax = plt.subplots(figsize=(8, 8))
        for n, points in enumerate(levels):
            color = LEVEL_COLORS[n % len(LEVEL_COLORS)]
            line, = ax.plot(points[:, 0], points[:, 1], color=color, linewidth=1.5, label=level_label(n))
            line.set_gid(f"curve_level_{n}")

        zero = np.zeros(1)
        x0 = float(eval_node(self.expr.x, zero)[0])
        y0 = float(eval_node(self.expr.y, zero)[0])
        marker, = ax.plot([x0], [y0], 'o', color='black', markersize=5, label="t = 0")
        marker.set_gid("origin_marker")

        self._fit_view(ax, levels)
        ax.set_aspect('equal', adjustable='box')
        ax.grid(True, alpha=0.3)
        ax.legend(loc='best')
        ax.set_title(f"x(t) = {self.expr.x_text},  y(t) = {self.expr.y_text}", fontsize=11)

        directory = os.path.dirname(out_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        fig.savefig(out_path, format='svg')
        plt.close(fig)

        return {
            'out_path': out_path,
            'levels': len(levels),
            'samples': self.samples,
            'warnings': list(self.warnings),
            'backend_used': self.backend_used,
        }

    @staticmethod
    def _fit_view(ax, levels):
        """Görünümü örnek noktalara %5 kenar payı ile sığdır"""
        stacked = np.vstack(levels)
        finite = stacked[np.all(np.isfinite(stacked), axis=1)]
        if finite.size == 0:
            return
        lo = finite.min(axis=0)
        hi = finite.max(axis=0)
        span = hi - lo
        span[span == 0] = 1.0
        ax.set_xlim(lo[0] - MARGIN * span[0], hi[0] + MARGIN * span[0])
        ax.set_ylim(lo[1] - MARGIN * span[1], hi[1] + MARGIN * span[1])


def plot_evolutes(expr, m, out_path, t_range=(-1.0, 1.0), samples=400, order=24,
                  backend=RATIONAL, tol=DEFAULT_TOL, origin_chain=None):
    """γ ve Ev¹..Ev^m eğrilerini SVG olarak kaydet"""
    plotter = EvolutePlotter(expr, m, t_range=t_range, samples=samples, order=order,
                             backend=backend, tol=tol, origin_chain=origin_chain)
    return plotter.plot(out_path)


def test_curve_plot():
    """(t^4, t^5) ve ilk evolütünü çiz"""
    from curve_expr import parse_curve

    print("\n" + "="*70)
    print("EVOLÜT ÇİZİM TESTİ")
    print("="*70)

    report = plot_evolutes(parse_curve("t^4", "t^5"), 1, 'output/cusp45_evolute.svg',
                           t_range=(-0.9, 0.9), samples=200)
    print(f"\n[INFO] Grafik kaydedildi: {report['out_path']}")
    print(f"  Seviye sayısı: {report['levels']}")
    for warning in report['warnings']:
        print(f"  [UYARI] {warning}")

    print("\n" + "="*70)
    print("✓ ÇİZİM TEST EDİLDİ")
    print("="*70)
    print()


if __name__ == "__main__":
    test_curve_plot()
