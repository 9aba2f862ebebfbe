from equations.commands import EquationCommand
from equations.gcd_lcm import left_gcd
from matrices.serializers import MatrixSerializer


class Command(EquationCommand):
    help = 'BX = A 의 모든 해의 왼쪽 최대공약수 F 를 출력합니다 (F 자신도 해입니다).'

    def add_arguments(self, parser):
        self.add_equation_arguments(parser)

    def handle(self, *args, **options):
        config, B, A = self.load_equation(options)
        _, solution_set = self.solve_or_fail(B, A, config)
        F = left_gcd(solution_set)
        if config['json']:
            self.emit_json(MatrixSerializer(F).data)
            return
        self.emit_matrices([('F', F)])
