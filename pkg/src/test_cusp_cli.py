"""
test_cusp_cli.py
Komut satırı arayüzü testleri: JSON çıktıları ve çıkış kodları
"""

import json
from fractions import Fraction

import pytest

from cusp_cli import EXIT_MATH, EXIT_OK, EXIT_PROPERTY, EXIT_USAGE, RunConfig, main, render_scalar


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if code == EXIT_OK or code == EXIT_PROPERTY else None
    return code, report, captured.err


class TestClassify:
    def test_cusp45_plus(self, capsys):
        code, report, _ = run(capsys, 'classify', 't^4', 't^5+t^7')
        assert code == EXIT_OK
        assert report['class'] == 'Cusp45Plus'
        assert report['n'] == 4
        assert report['witness']['A'] == '-2880'
        assert report['witness']['numerator'] == '20901888000'
        assert report['witness']['kappa_q'] == pytest.approx(2625)
        assert report['witness']['T'] == '1'
        assert report['backend_used'] == 'rational'
        assert report['order'] == 16

    @pytest.mark.parametrize("x, y", [("t^2", "t^3"), ("t - sin(t)", "1 - cos(t)")])
    def test_cusp23(self, capsys, x, y):
        code, report, _ = run(capsys, 'classify', x, y)
        assert code == EXIT_OK
        assert report['class'] == 'Cusp23'
        assert report['conditions'][0]['name'] == 'cusp23'
        assert report['conditions'][0]['passed'] is True

    def test_two_n_flags_sufficient_only(self, capsys):
        _, report, _ = run(capsys, 'classify', 't^2', 't^9')
        assert report['class'] == 'Cusp2N'
        assert report['class_n'] == 9
        assert report['sufficient_only'] is True

    def test_max_two_n_alias(self, capsys):
        _, report, _ = run(capsys, 'classify', 't^2', 't^15', '--fact22-max-n', '15')
        assert report['class'] == 'Cusp2N'
        _, report, _ = run(capsys, 'classify', 't^2', 't^15')
        assert report['class'] == 'Inconclusive'
        assert 'reason' in report

    def test_rationals_rendered_as_strings(self, capsys):
        _, report, _ = run(capsys, 'classify', 't^2', 't^5')
        vector = report['conditions'][1]['values']['vector']
        assert vector == ['1440', '0']
        assert report['witness']['derivs']['2'] == ['2', '0']

    def test_transcendental_constant_falls_back_to_float(self, capsys):
        code, report, err = run(capsys, 'classify', 'sin(t + 1) - sin(1)', 't^2')
        assert code == EXIT_OK
        assert report['backend_used'] == 'float'
        assert report['class'] == 'RegularPoint'
        assert '[UYARI]' in err

    def test_output_is_deterministic(self, capsys):
        main(['classify', 't^4', 't^5-t^7'])
        first = capsys.readouterr().out
        main(['classify', 't^4', 't^5-t^7'])
        assert capsys.readouterr().out == first


class TestEvolute:
    def test_cusp45_chain(self, capsys):
        code, report, _ = run(capsys, 'evolute', 't^4', 't^5', '-m', '3')
        assert code == EXIT_OK
        assert report['k'] == 3
        assert report['ell']['0'] == '5/4'
        levels = report['levels']
        assert levels[1]['y'] == {'3': '16/5', '5': '6'}
        assert levels[3]['y']['1'] == '-1536/125'
        assert [level['singular_at_0'] for level in levels] == [True, True, True, False]
        assert [level['trusted_order'] for level in levels] == [19, 18, 17, 16]
        assert report['negative_criterion'] == {'2': True, '3': True, '4': False}

    def test_circle(self, capsys):
        code, report, _ = run(capsys, 'evolute', 'cos(t) - 1', 'sin(t)', '-m', '1')
        assert code == EXIT_OK
        assert report['levels'][1]['x'] == {'0': '-1'}
        assert report['levels'][1]['y'] == {}
        assert report['negative_criterion'] == {}

    def test_regular_float_curve_is_not_an_inflection(self, capsys):
        code, report, err = run(capsys, 'evolute', '2*t + t^2', 't + 3*t^2', '-m', '1')
        assert code == EXIT_OK
        assert report['backend_used'] == 'float'
        assert [level['singular_at_0'] for level in report['levels']] == [False, False]
        assert report['ell']['0'] == pytest.approx(2)
        assert '[UYARI]' in err

    def test_inflection_exit_code(self, capsys):
        code, _, err = run(capsys, 'evolute', 't', 't^3')
        assert code == EXIT_MATH
        assert 'InflectionError' in err

    def test_order_exhausted_exit_code(self, capsys):
        code, _, _ = run(capsys, 'evolute', 't^4', 't^5', '-m', '3', '--order', '6')
        assert code == EXIT_MATH


class TestPlot:
    def test_writes_svg(self, capsys, tmp_path):
        out = tmp_path / 'cusp.svg'
        code, report, _ = run(capsys, 'plot', 't^4', 't^5', '-m', '1', '--range=-0.9,0.9',
                              '--samples', '30', '--out', str(out))
        assert code == EXIT_OK
        assert report['levels'] == 2
        assert report['out_path'] == str(out)
        assert out.exists()

    def test_bad_range(self, capsys, tmp_path):
        code, _, _ = run(capsys, 'plot', 't^4', 't^5', '--range=1,-1', '--out', str(tmp_path / 'x.svg'))
        assert code == EXIT_USAGE


class TestProperty:
    def test_passing_run(self, capsys):
        code, report, _ = run(capsys, 'property', '--seed', '1', '--trials', '5')
        assert code == EXIT_OK
        assert report['failures'] == 0
        assert report['suites']['normal_form_T'] == {'passed': 5, 'trials': 5, 'failed': 0}

    def test_corrupt_constant_fails(self, capsys):
        code, report, _ = run(capsys, 'property', '--trials', '10', '--corrupt-constant')
        assert code == EXIT_PROPERTY
        assert report['suites']['normal_form_T']['failed'] > 0


class TestUsage:
    @pytest.mark.parametrize("argv", [
        [],
        ['classify', 't^2'],
        ['classify', 't^2', 't^3', '--samples', '1'],
        ['classify', 't^2', 't^3', '--max-two-n', '10'],
        ['classify', 't^2', 't^3', '--order', '1'],
        ['classify', 't^2', 't^3', '--backend', 'decimal'],
        ['property', '--trials', '0'],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == EXIT_USAGE

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, 'classify', 't^', 't^3')
        assert code == EXIT_USAGE
        assert 'konum 2' in err

    def test_default_orders(self):
        cfg = RunConfig()
        assert cfg.order_for('classify') == 16
        assert cfg.order_for('evolute') == 24
        assert RunConfig(order=30).order_for('classify') == 30

    def test_render_scalar(self):
        assert render_scalar(Fraction(-3, 4)) == '-3/4'
        assert render_scalar(Fraction(6, 3)) == '2'
        assert render_scalar(0.5) == 0.5
