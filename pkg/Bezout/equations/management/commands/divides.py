from equations.gcd_lcm import left_divides, right_divides
from equations.serializers import DivisibilitySerializer
from matrices.commands import MatrixCommand


class Command(MatrixCommand):
    help = 'D 가 A 의 왼쪽 약수인지 (A = D W) 판정합니다. --right 이면 A = G D 인지 판정합니다.'

    def add_arguments(self, parser):
        parser.add_argument('D', help='약수 후보 행렬 파일')
        parser.add_argument('A', help='배수 후보 행렬 파일')
        parser.add_argument('--right', action='store_true', help='오른쪽 약수 판정 (G D = A)')
        parser.add_argument('--witness', action='store_true', help='증인 행렬도 출력')
        self.add_ring_arguments(parser)

    def handle(self, *args, **options):
        config = self.load_config(options)
        ring = config['ring']
        D = self.load_matrix(options['D'], ring)
        A = self.load_matrix(options['A'], ring)
        self.require_square_pair(D, A)

        side = 'right' if options['right'] else 'left'
        ok, witness = (right_divides if options['right'] else left_divides)(D, A)

        if config['json']:
            self.emit_json(DivisibilitySerializer({
                'divides': ok, 'side': side, 'witness': witness if config['witness'] else None,
            }).data)
        else:
            self.stdout.write(f'# {side} divides: {"true" if ok else "false"}')
            if ok and config['witness']:
                self.emit_matrices([('G' if options['right'] else 'W', witness)])
        if not ok:
            self.fail(f'{side} 약수가 아닙니다.')
