from matrices.commands import MatrixCommand
from normal_forms.serializers import SmithSerializer
from normal_forms.smith import smith


class Command(MatrixCommand):
    help = '행렬의 Smith 정규형과 변환행렬 P, Q (P*A*Q = E) 를 출력합니다.'

    def add_arguments(self, parser):
        parser.add_argument('matrix', help='행렬 파일 경로')
        parser.add_argument('--inverses', action='store_true', help='Pinv, Qinv 도 함께 출력')
        self.add_ring_arguments(parser)

    def handle(self, *args, **options):
        config = self.load_config(options)
        ring = config['ring']
        matrix = self.load_matrix(options['matrix'], ring)
        decomposition = smith(matrix)

        if config['json']:
            self.emit_json(SmithSerializer(decomposition, context={'ring': ring}).data)
            return

        named = [('P', decomposition.P), ('E', decomposition.E), ('Q', decomposition.Q)]
        if options['inverses']:
            named += [('Pinv', decomposition.Pinv), ('Qinv', decomposition.Qinv)]
        self.emit_matrices(named)
