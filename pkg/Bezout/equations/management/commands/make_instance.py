import random
from pathlib import Path

from django.conf import settings

from matrices.commands import MatrixCommand
from matrices.fileformat import write_matrix
from matrices.generators import random_matrix


class Command(MatrixCommand):
    """
    실험용 무작위 방정식 B, A 파일을 만드는 명령어입니다.

    실행 방법:
    python manage.py make_instance out/ --size 4 --seed 3
    """
    help = '무작위 B, C 로 A = BC 인 방정식 파일 (B.mat, A.mat, C.mat) 을 만듭니다.'

    def add_arguments(self, parser):
        parser.add_argument('out_dir', help='출력 디렉터리')
        parser.add_argument('--size', type=int, default=3, help='행렬 크기 n')
        parser.add_argument('--seed', type=int, default=None, help='난수 시드')
        parser.add_argument('--bound', type=int, default=settings.BEZOUT.get('RANDOM_ENTRY_BOUND', 5),
                            help='원소(계수) 절댓값 상한')
        parser.add_argument('--unsolvable', action='store_true', help='A 를 곱이 아닌 무작위 행렬로 만듭니다')
        self.add_ring_arguments(parser, json_flag=False)

    def handle(self, *args, **options):
        config = self.load_config(options)
        ring = config['ring']
        rng = random.Random(config['seed'])
        n, bound = options['size'], options['bound']
        degree = settings.BEZOUT.get('RANDOM_POLY_DEGREE', 2) if ring.name == 'polyq' else 0

        out_dir = Path(options['out_dir'])
        out_dir.mkdir(parents=True, exist_ok=True)

        B = random_matrix(ring, rng, n, n, bound, degree)
        C = random_matrix(ring, rng, n, n, bound, degree)
        A = random_matrix(ring, rng, n, n, bound, degree) if options['unsolvable'] else B.multiply(C)

        write_matrix(out_dir / 'B.mat', B)
        write_matrix(out_dir / 'A.mat', A)
        if not options['unsolvable']:
            write_matrix(out_dir / 'C.mat', C)
        self.stdout.write(self.style.SUCCESS(f'{n}x{n} 방정식 파일을 {out_dir} 에 저장했습니다.'))
