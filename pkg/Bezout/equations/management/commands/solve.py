from django.core.management.base import CommandError

from equations.commands import EquationCommand
from equations.gcd_lcm import left_gcd, left_lcm
from equations.serializers import SolveResultSerializer
from equations.solver import SolutionParameter, general_solution, particular_solution
from matrices.commands import EXIT_USAGE
from matrices.exceptions import DimensionMismatch


class Command(EquationCommand):
    help = '행렬 방정식 BX = A 를 풀어 해를 출력합니다. 해가 없으면 실패한 나눗셈 칸을 알려줍니다.'

    def add_arguments(self, parser):
        self.add_equation_arguments(parser)
        choice = parser.add_mutually_exclusive_group()
        choice.add_argument('--particular', action='store_true', help='특수해 C (= l.c.m. N) 출력 (기본값)')
        choice.add_argument('--with-params', metavar='T.mat', help='[T3 T4] 매개변수 행렬로 만든 해 출력')
        choice.add_argument('--gcd', action='store_true', help='해 집합의 왼쪽 g.c.d. F 출력')
        choice.add_argument('--lcm', action='store_true', help='해 집합의 왼쪽 l.c.m. N 출력')
        parser.add_argument('--right', action='store_true', help='XB = A 를 전치로 풉니다')

    def handle(self, *args, **options):
        config, B, A = self.load_equation(options)
        ring = config['ring']
        if options['right']:
            B, A = B.transpose(), A.transpose()

        certificate, solution_set = self.solve_or_fail(B, A, config)

        # 1. 출력할 해 고르기
        if options['gcd']:
            X, label = left_gcd(solution_set), 'F'
        elif options['lcm']:
            X, label = left_lcm(solution_set), 'N'
        elif options['with_params']:
            block = self.load_matrix(options['with_params'], ring)
            try:
                parameter = SolutionParameter.from_block(block, certificate.t)
                X = general_solution(solution_set, parameter)
            except DimensionMismatch as e:
                raise CommandError(f'매개변수 행렬 크기가 맞지 않습니다: {e}', returncode=EXIT_USAGE)
            label = 'X'
        else:
            X, label = particular_solution(solution_set), 'C'

        # 2. XB = A 였다면 다시 전치
        if options['right']:
            X = X.transpose()

        if config['json']:
            self.emit_json(SolveResultSerializer({
                'solvable': True, 'n': certificate.n, 'k': certificate.k, 't': certificate.t,
                'failing_cell': None, 'X': X,
            }).data)
            return
        self.stdout.write(f'# solvable n={certificate.n} k={certificate.k} t={certificate.t}')
        self.emit_matrices([(label, X)])
