"""
관리 명령어를 하나의 진입점으로 묶은 CLI.

    python -m Bezout.cli solve B.mat A.mat --gcd

종료 코드: 0 성공/참, 1 거짓/해 없음/검증 실패, 2 사용법/파싱 오류
"""
import os
import sys

SUBCOMMANDS = (
    'snf', 'hnf', 'solve', 'gcd', 'lcm', 'annihilator', 'divides', 'verify', 'make_instance',
)

USAGE = 'usage: bezout {' + ','.join(SUBCOMMANDS) + '} ...'


def _load_command(name):
    from django.core.management import get_commands, load_command_class
    return load_command_class(get_commands()[name], name)


def run(argv=None, stdout=None, stderr=None):
    """argv (프로그램 이름 제외) 를 실행하고 종료 코드를 돌려줍니다."""
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(USAGE + '\n')
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Bezout.settings')
    import django
    from django.core.management.base import CommandError

    django.setup()
    name = argv[0]
    command = _load_command(name)
    try:
        # 파서 오류는 CommandError 로, --help 는 SystemExit(0) 으로 옵니다
        options = vars(command.create_parser('bezout', name).parse_args(argv[1:]))
    except SystemExit as e:
        return 2 if e.code else 0
    except CommandError as e:
        stderr.write(f'{e}\n')
        return 2

    args = options.pop('args', ())
    try:
        command.execute(*args, stdout=stdout, stderr=stderr, **options)
    except CommandError as e:
        stderr.write(f'CommandError: {e}\n')
        return e.returncode
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
