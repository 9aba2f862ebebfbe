"""
행렬 파일을 다루는 관리 명령어들의 공통 부모 클래스.

종료 코드 규칙
  0: 성공 / 참
  1: 거짓 / 해 없음 / 검증 실패  -> CommandError(returncode=1)
  2: 사용법 또는 파싱 오류       -> CommandError(returncode=2)
"""
import json
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from rings.domains import RINGS

from .exceptions import DimensionMismatch, MatrixParseError
from .fileformat import format_named, read_matrix
from .serializers import CliConfigSerializer

EXIT_FALSE = 1
EXIT_USAGE = 2


class MatrixCommand(BaseCommand):
    requires_system_checks = []

    def add_ring_arguments(self, parser, json_flag=True):
        parser.add_argument('--ring', choices=sorted(RINGS),
                            default=settings.BEZOUT.get('DEFAULT_RING', 'int'),
                            help='스칼라 환 (int: 정수, polyq: 유리계수 다항식)')
        if json_flag:
            parser.add_argument('--json', action='store_true', help='결과를 JSON 으로 출력')

    def load_config(self, options):
        serializer = CliConfigSerializer(data={
            'ring': options.get('ring'),
            'json': options.get('json', False),
            'seed': options.get('seed'),
            'trials': options.get('trials'),
            'witness': options.get('witness', False),
        })
        if not serializer.is_valid():
            raise CommandError(f'잘못된 옵션입니다: {dict(serializer.errors)}', returncode=EXIT_USAGE)
        if options.get('verbosity', 1) >= 2:
            logging.getLogger().setLevel(logging.DEBUG)
        return serializer.validated_data

    def load_matrix(self, path, ring):
        try:
            return read_matrix(path, ring)
        except MatrixParseError as e:
            raise CommandError(f'행렬 파일 파싱 오류: {e}', returncode=EXIT_USAGE)
        except OSError as e:
            raise CommandError(f'행렬 파일을 읽을 수 없습니다: {e}', returncode=EXIT_USAGE)

    def require_square_pair(self, left, right):
        if not (left.is_square and right.is_square and left.shape == right.shape):
            raise CommandError(
                f'두 행렬은 같은 크기의 정사각행렬이어야 합니다: {left.shape} / {right.shape}',
                returncode=EXIT_USAGE)

    def emit_matrices(self, named):
        """(name, matrix) 목록을 '# name' 헤더와 함께 출력"""
        self.stdout.write(''.join(format_named(name, m) for name, m in named), ending='')

    def emit_json(self, payload):
        self.stdout.write(json.dumps(payload, sort_keys=True, ensure_ascii=False))

    def fail(self, message):
        raise CommandError(message, returncode=EXIT_FALSE)

    def dimension_error(self, error: DimensionMismatch):
        return CommandError(f'행렬 크기가 맞지 않습니다: {error}', returncode=EXIT_USAGE)
