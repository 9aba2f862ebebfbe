from equations.commands import EquationCommand
from equations.gcd_lcm import gcd_lcm_pair
from equations.serializers import GcdLcmSerializer
from matrices.serializers import MatrixSerializer


class Command(EquationCommand):
    help = 'BX = A 의 모든 해의 왼쪽 최소공배수 N 을 출력합니다 (모든 해 X 에 대해 N = K X).'

    def add_arguments(self, parser):
        self.add_equation_arguments(parser)
        parser.add_argument('--projector', action='store_true', help='N = K X 의 사영행렬 K 도 출력')

    def handle(self, *args, **options):
        config, B, A = self.load_equation(options)
        _, solution_set = self.solve_or_fail(B, A, config)
        pair = gcd_lcm_pair(solution_set)
        if config['json']:
            payload = GcdLcmSerializer(pair).data if options['projector'] else MatrixSerializer(pair.N).data
            self.emit_json(payload)
            return
        named = [('N', pair.N)]
        if options['projector']:
            named.append(('K', pair.K))
        self.emit_matrices(named)
