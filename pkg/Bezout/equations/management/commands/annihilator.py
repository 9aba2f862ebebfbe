from django.core.management.base import CommandError

from equations.solver import AnnihilatorParameter, annihilator_element, annihilator_generators
from matrices.commands import EXIT_USAGE, MatrixCommand
from matrices.exceptions import DimensionMismatch
from matrices.serializers import MatrixSerializer
from normal_forms.smith import smith


class Command(MatrixCommand):
    help = 'B 의 오른쪽 소멸자 Ann_r(B) = { U [0; D] } 의 생성 행렬 또는 원소를 출력합니다.'

    def add_arguments(self, parser):
        parser.add_argument('B', help='행렬 B 파일')
        parser.add_argument('--with-params', metavar='D.mat', help='(n-t) x n 행렬 D 로 만든 원소 출력')
        self.add_ring_arguments(parser)

    def handle(self, *args, **options):
        config = self.load_config(options)
        ring = config['ring']
        B = self.load_matrix(options['B'], ring)
        if not B.is_square:
            raise CommandError(f'B 는 정사각행렬이어야 합니다: {B.shape}', returncode=EXIT_USAGE)
        snf_b = smith(B)

        if options['with_params']:
            D = self.load_matrix(options['with_params'], ring)
            try:
                Z = annihilator_element(snf_b, AnnihilatorParameter(D))
            except DimensionMismatch as e:
                raise self.dimension_error(e)
        else:
            Z = annihilator_generators(snf_b)

        if config['json']:
            self.emit_json(MatrixSerializer(Z).data)
            return
        self.stdout.write(f'# n={B.rows} t={snf_b.rank}')
        self.emit_matrices([('Z', Z)])
