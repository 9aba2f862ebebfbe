from matrices.commands import MatrixCommand
from normal_forms.hermite import hermite_col
from normal_forms.serializers import HermiteSerializer


class Command(MatrixCommand):
    help = '행렬의 열 방향 Hermite 정규형 H 와 변환행렬 W (A*W = H) 를 출력합니다.'

    def add_arguments(self, parser):
        parser.add_argument('matrix', help='행렬 파일 경로')
        self.add_ring_arguments(parser)

    def handle(self, *args, **options):
        config = self.load_config(options)
        ring = config['ring']
        matrix = self.load_matrix(options['matrix'], ring)
        decomposition = hermite_col(matrix)

        if config['json']:
            self.emit_json(HermiteSerializer(decomposition, context={'ring': ring}).data)
            return
        self.emit_matrices([('H', decomposition.H), ('W', decomposition.W)])
