from django.core.management.base import CommandError

from matrices.commands import EXIT_FALSE, MatrixCommand

from .serializers import SolveResultSerializer
from .solver import build_solution_set, certify


class EquationCommand(MatrixCommand):
    """'B.mat A.mat' 두 파일을 받는 명령어들의 공통 처리"""

    def add_equation_arguments(self, parser):
        parser.add_argument('B', help='계수 행렬 B 파일')
        parser.add_argument('A', help='우변 행렬 A 파일')
        self.add_ring_arguments(parser)

    def load_equation(self, options):
        config = self.load_config(options)
        ring = config['ring']
        B = self.load_matrix(options['B'], ring)
        A = self.load_matrix(options['A'], ring)
        self.require_square_pair(B, A)
        return config, B, A

    def solution_set_or_fail(self, certificate, config):
        if certificate.solvable:
            return build_solution_set(certificate)
        i, j = certificate.failing_cell
        if config['json']:
            self.emit_json(SolveResultSerializer({
                'solvable': False, 'n': certificate.n, 'k': certificate.k, 't': certificate.t,
                'failing_cell': [i, j], 'X': None,
            }).data)
        if i <= certificate.t:
            reason = f'phi_{i} 가 l_{i}{j} * eps_{j} 를 나누지 않습니다'
        else:
            reason = f'l_{i}{j} 가 0 이 아닙니다 (i > t = {certificate.t})'
        raise CommandError(f'해가 없습니다: cell ({i}, {j}): {reason}', returncode=EXIT_FALSE)

    def solve_or_fail(self, B, A, config):
        certificate = certify(B, A)
        return certificate, self.solution_set_or_fail(certificate, config)
