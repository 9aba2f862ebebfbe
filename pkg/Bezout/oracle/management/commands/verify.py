from django.conf import settings

from equations.commands import EquationCommand
from oracle.battery import run_battery
from oracle.serializers import BatteryReportSerializer


class Command(EquationCommand):
    """
    한 방정식 인스턴스에 대해 전체 교차 검증을 실행합니다.

    실행 방법:
    python manage.py verify B.mat A.mat --trials 50 --seed 7
    """
    help = 'Smith 풀이, 첨가 행렬 판정, Hermite 풀이를 교차 검증하고 PASS/FAIL 보고서를 출력합니다.'

    def add_arguments(self, parser):
        self.add_equation_arguments(parser)
        parser.add_argument('--trials', type=int, default=settings.BEZOUT.get('DEFAULT_TRIALS', 10),
                            help='섞은 인스턴스 시행 횟수')
        parser.add_argument('--seed', type=int, default=None, help='난수 시드')
        parser.add_argument('--expect-gcd', metavar='F.mat', help='g.c.d. 와 비교할 행렬 (상호 동반 판정)')
        parser.add_argument('--expect-lcm', metavar='N.mat', help='l.c.m. 과 비교할 행렬 (상호 동반 판정)')

    def handle(self, *args, **options):
        config, B, A = self.load_equation(options)
        ring = config['ring']
        expect_gcd = self.load_matrix(options['expect_gcd'], ring) if options['expect_gcd'] else None
        expect_lcm = self.load_matrix(options['expect_lcm'], ring) if options['expect_lcm'] else None

        results = run_battery(
            B, A,
            trials=config['trials'],
            seed=config['seed'],
            steps=settings.BEZOUT.get('PERTURBATION_STEPS', 6),
            degree=settings.BEZOUT.get('RANDOM_POLY_DEGREE', 2) if ring.name == 'polyq' else 0,
            expect_gcd=expect_gcd,
            expect_lcm=expect_lcm,
        )
        passed = all(r.passed for r in results)

        if config['json']:
            self.emit_json(BatteryReportSerializer({'passed': passed, 'checks': results}).data)
        else:
            for result in results:
                self.stdout.write(result.line)
        if not passed:
            failed = sum(1 for r in results if not r.passed)
            self.fail(f'{len(results)} 개 검사 중 {failed} 개가 실패했습니다.')
