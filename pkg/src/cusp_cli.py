"""
cusp_cli.py
Komut Satırı Arayüzü
  classify <x> <y>                         -> JSON sınıflandırma raporu
  evolute  <x> <y> -m M                    -> JSON evolüt zinciri
  plot     <x> <y> -m M --range=a,b --samples S --out dosya.svg
  property --seed S --trials T             -> JSON test özeti

Çıkış kodları: 0 başarı (Inconclusive dahil), 1 kullanım/ayrıştırma hatası,
2 matematiksel ön koşul ihlali, 3 değişmezlik testi başarısız.
"""

import argparse
import json
import sys
from fractions import Fraction

from jet_core import BACKENDS, DEFAULT_TOL, FLOAT, RATIONAL, BackendMismatchError, CuspError
from curve_expr import ParseError, parse_curve
from plane_curve import PlaneVec, to_jet
from classifier import DEFAULT_MAX_TWO_N, classify
from front_evolute import evolute_chain, negative_criterion
from curve_plot import plot_evolutes
from property_suite import run_property_suites

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_PROPERTY = 3

DEFAULT_ORDERS = {'classify': 16, 'evolute': 24, 'plot': 24}


class UsageError(Exception):
    """argparse kullanım hatası (çıkış kodu 1)"""


class CuspArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class RunConfig:
    """
    Çalışma ayarları, yalnızca komut satırı bayraklarından kurulur

    Args:
        order (int): Jet mertebesi (None ise komuta göre 16 / 24)
        backend (str): 'rational' veya 'float'
        tol (float): Float sıfır toleransı (göreli)
        max_evolute (int): Evolüt sayısı m
        t_range (tuple): Çizim parametre aralığı
        samples (int): Çizim örnek sayısı
        out_path (str): SVG çıktı dosyası
    """

    def __init__(self, order=None, backend=RATIONAL, tol=DEFAULT_TOL, max_evolute=1,
                 t_range=(-1.0, 1.0), samples=400, out_path='output/evolutes.svg',
                 seed=1, trials=100, max_two_n=DEFAULT_MAX_TWO_N, corrupt_constant=False):
        self.order = order
        self.backend = backend
        self.tol = tol
        self.max_evolute = max_evolute
        self.t_range = t_range
        self.samples = samples
        self.out_path = out_path
        self.seed = seed
        self.trials = trials
        self.max_two_n = max_two_n
        self.corrupt_constant = corrupt_constant

    @classmethod
    def from_args(cls, ns):
        return cls(
            order=ns.order,
            backend=ns.backend,
            tol=ns.tol,
            max_evolute=getattr(ns, 'max_evolute', 1),
            t_range=parse_range(getattr(ns, 'range', '-1,1')),
            samples=getattr(ns, 'samples', 400),
            out_path=getattr(ns, 'out', 'output/evolutes.svg'),
            seed=getattr(ns, 'seed', 1),
            trials=getattr(ns, 'trials', 100),
            max_two_n=ns.max_two_n,
            corrupt_constant=getattr(ns, 'corrupt_constant', False),
        )

    def order_for(self, command):
        return self.order if self.order is not None else DEFAULT_ORDERS.get(command, 16)

    def validate(self):
        """Değişmezleri kontrol et, ihlalde ValueError"""
        if self.order is not None and self.order < 2:
            raise ValueError(f"--order en az 2 olmalı (verilen: {self.order})")
        if self.backend not in BACKENDS:
            raise ValueError(f"Bilinmeyen backend: {self.backend}")
        if self.samples < 2:
            raise ValueError(f"--samples en az 2 olmalı (verilen: {self.samples})")
        if not self.tol > 0:
            raise ValueError(f"--tol pozitif olmalı (verilen: {self.tol})")
        if self.max_evolute < 0:
            raise ValueError("-m negatif olamaz")
        if self.trials < 1:
            raise ValueError("--trials en az 1 olmalı")
        if self.max_two_n < 9 or self.max_two_n % 2 == 0:
            raise ValueError("--max-two-n 9'dan büyük ya da eşit tek sayı olmalı")
        if not self.t_range[0] < self.t_range[1]:
            raise ValueError(f"--range a,b için a < b olmalı (verilen: {self.t_range})")
        return self


def parse_range(text):
    """'a,b' metnini (a, b) float çiftine çevir"""
    parts = text.split(',')
    if len(parts) != 2:
        raise ValueError(f"--range 'a,b' biçiminde olmalı (verilen: {text!r})")
    return float(parts[0]), float(parts[1])


# --- JSON dönüşümü ---

def render_scalar(value):
    """Fraction -> "p/q" (q = 1 ise "p"); float olduğu gibi"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return value


def to_json_value(value):
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, PlaneVec):
        return [render_scalar(value.u), render_scalar(value.v)]
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    return render_scalar(value)


def jet_terms(jet):
    """Sıfırdan farklı katsayılar: {"üs": "p/q"}"""
    return {str(k): render_scalar(c) for k, c in enumerate(jet.coeffs) if c != 0}


def emit(report):
    print(json.dumps(report, indent=2, ensure_ascii=False))


def warn(message):
    print(f"[UYARI] {message}", file=sys.stderr)


def _curve_jet(x_expr, y_expr, order, backend):
    """İfadeleri jet'e çevir; rasyonel olmayan sabitlerde float'a geç"""
    expr = parse_curve(x_expr, y_expr)
    try:
        return expr, to_jet(expr, order, backend), backend
    except BackendMismatchError as e:
        warn(f"{e}; float backend kullanılıyor")
        return expr, to_jet(expr, order, FLOAT), FLOAT


# --- Komutlar ---

def cmd_classify(x_expr, y_expr, cfg):
    """
    Eğriyi sınıflandır

    Returns:
        dict: class, class_n, n, sufficient_only, witness, conditions, backend_used
    """
    order = cfg.order_for('classify')
    _, c, backend_used = _curve_jet(x_expr, y_expr, order, cfg.backend)
    cusp, witness = classify(c, max_two_n=cfg.max_two_n, tol=cfg.tol)

    report = {
        'command': 'classify',
        'x': x_expr,
        'y': y_expr,
        'order': order,
        'class': cusp.name,
        'class_n': cusp.n,
        'n': witness.n,
        'sufficient_only': cusp.sufficient_only,
        'witness': {
            'A': witness.A,
            'B': witness.B,
            'C': witness.C,
            'D': witness.D,
            'numerator': witness.numerator,
            'kappa_q': witness.kappa_q,
            'T': witness.T,
            'scale': witness.scale,
            'derivs': {k: witness.derivs[k] for k in sorted(witness.derivs)},
        },
        'conditions': [
            {'name': cond.name, 'passed': cond.passed, 'values': cond.values}
            for cond in witness.conditions
        ],
        'backend_used': backend_used,
    }
    if cusp.reason is not None:
        report['reason'] = cusp.reason
    return to_json_value(report)


def _chain_for(x_expr, y_expr, m, cfg, command='evolute'):
    order = cfg.order_for(command)
    expr, c, _ = _curve_jet(x_expr, y_expr, order, cfg.backend)
    chain = evolute_chain(c, m, cfg.tol)
    if chain.backend_used == FLOAT and c.backend == RATIONAL:
        warn("‖u(0)‖² rasyonel bir kare değil; zincir float backend ile hesaplandı")
    return expr, c, chain, order


def cmd_evolute(x_expr, y_expr, m, cfg):
    """
    Evolüt zinciri raporu

    Returns:
        dict: Her seviye için katsayılar, singular_at_0, trusted_order ve
        n = 2..m+1 için negatif ölçüt sonuçları
    """
    _, c, chain, order = _chain_for(x_expr, y_expr, m, cfg)

    verdicts = {}
    if chain.levels[0].singular_at_0:
        for n in range(2, m + 2):
            verdicts[str(n)] = negative_criterion(c, n, cfg.tol, chain=chain)

    report = {
        'command': 'evolute',
        'x': x_expr,
        'y': y_expr,
        'order': order,
        'm': m,
        'k': chain.frame.k,
        'ell': jet_terms(chain.ell),
        'levels': [
            {
                'level': level.index,
                'x': jet_terms(level.curve.x),
                'y': jet_terms(level.curve.y),
                'singular_at_0': level.singular_at_0,
                'trusted_order': level.trusted_order,
            }
            for level in chain.levels
        ],
        'negative_criterion': verdicts,
        'backend_used': chain.backend_used,
    }
    return to_json_value(report)


def cmd_plot(x_expr, y_expr, m, cfg):
    """γ ve Ev¹..Ev^m eğrilerini SVG dosyasına çiz"""
    expr, _, chain, order = _chain_for(x_expr, y_expr, m, cfg, 'plot')
    summary = plot_evolutes(expr, m, cfg.out_path, t_range=cfg.t_range, samples=cfg.samples,
                            order=order, backend=cfg.backend, tol=cfg.tol, origin_chain=chain)
    for message in summary['warnings']:
        warn(message)
    print(f"[INFO] Grafik kaydedildi: {summary['out_path']}", file=sys.stderr)
    return to_json_value({'command': 'plot', 'x': x_expr, 'y': y_expr, 'm': m, **summary})


def cmd_property(seed, trials, cfg):
    """
    Değişmezlik testleri

    Returns:
        tuple: (JSON özet, başarısız deneme sayısı)
    """
    summary, _ = run_property_suites(seed=seed, trials=trials, corrupt_constant=cfg.corrupt_constant,
                                     verbose=True)
    suites = {
        suite: {'passed': int(row['passed']), 'trials': int(row['trials']), 'failed': int(row['failed'])}
        for suite, row in summary.iterrows()
    }
    failures = int(summary['failed'].sum())
    report = {
        'command': 'property',
        'seed': seed,
        'trials': trials,
        'corrupt_constant': cfg.corrupt_constant,
        'suites': suites,
        'failures': failures,
    }
    return report, failures


# --- Argümanlar ---

def build_parser():
    common = CuspArgumentParser(add_help=False)
    common.add_argument('--order', type=int, default=None,
                        help="Jet mertebesi (varsayılan: classify 16, evolute/plot 24)")
    common.add_argument('--backend', choices=BACKENDS, default=RATIONAL, help="Skaler backend")
    common.add_argument('--tol', type=float, default=DEFAULT_TOL, help="Float göreli sıfır toleransı")
    common.add_argument('--max-two-n', '--fact22-max-n', dest='max_two_n', type=int,
                        default=DEFAULT_MAX_TWO_N, help="(2,n) ölçütünde en büyük tek n")

    parser = CuspArgumentParser(
        prog='cusp_cli',
        description="Düzlem eğrisi sivri nokta sınıflandırıcı ve cephe evolütleri",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_classify = sub.add_parser('classify', parents=[common], help="t=0 noktasını sınıflandır")
    p_classify.add_argument('x', help="x(t) ifadesi")
    p_classify.add_argument('y', help="y(t) ifadesi")

    p_evolute = sub.add_parser('evolute', parents=[common], help="Evolüt zinciri")
    p_evolute.add_argument('x')
    p_evolute.add_argument('y')
    p_evolute.add_argument('-m', '--max-evolute', type=int, default=1, help="Evolüt sayısı")

    p_plot = sub.add_parser('plot', parents=[common],
                            help="SVG çizimi (her seviye gid='curve_level_<n>' grubunda tek çizgi yolu)")
    p_plot.add_argument('x')
    p_plot.add_argument('y')
    p_plot.add_argument('-m', '--max-evolute', type=int, default=1)
    p_plot.add_argument('--range', default='-1,1', help="Parametre aralığı a,b (ör. --range=-1,1)")
    p_plot.add_argument('--samples', type=int, default=400)
    p_plot.add_argument('--out', default='output/evolutes.svg')

    p_property = sub.add_parser('property', parents=[common], help="Değişmezlik testleri")
    p_property.add_argument('--seed', type=int, default=1)
    p_property.add_argument('--trials', type=int, default=100)
    p_property.add_argument('--corrupt-constant', action='store_true',
                            help="Negatif kontrol: -77 yerine -76")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        cfg = RunConfig.from_args(ns).validate()
    except (UsageError, ValueError) as e:
        print(f"[HATA] {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if ns.command == 'classify':
            emit(cmd_classify(ns.x, ns.y, cfg))
        elif ns.command == 'evolute':
            emit(cmd_evolute(ns.x, ns.y, cfg.max_evolute, cfg))
        elif ns.command == 'plot':
            emit(cmd_plot(ns.x, ns.y, cfg.max_evolute, cfg))
        else:
            report, failures = cmd_property(cfg.seed, cfg.trials, cfg)
            emit(report)
            if failures:
                print(f"✗ {failures} deneme başarısız", file=sys.stderr)
                return EXIT_PROPERTY
    except ParseError as e:
        print(f"[HATA] Ayrıştırma: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CuspError as e:
        print(f"[HATA] {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
