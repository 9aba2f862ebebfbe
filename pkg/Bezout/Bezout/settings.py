"""
Django settings for Bezout project.

환 위의 행렬 방정식 BX = A 풀이 도구입니다. 웹 서버 없이 관리 명령어
(python manage.py solve ... / python -m Bezout.cli solve ...) 로만 사용합니다.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# 웹 요청을 받지 않으므로 서명용으로만 쓰입니다
SECRET_KEY = 'django-insecure-bezout-local-cli-only'

DEBUG = False

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'rings',
    'matrices',
    'normal_forms',
    'equations',
    'oracle',
]

MIDDLEWARE = []


# Database
# 모든 계산은 메모리에서 끝나며 모델은 없습니다. 테스트는 SimpleTestCase 만 씁니다.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': BASE_DIR / 'db.sqlite3',
    }
}


# Internationalization

LANGUAGE_CODE = 'ko-kr'

TIME_ZONE = 'Asia/Seoul'

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# ========================================
# 행렬 방정식 도구 설정
# ========================================
BEZOUT = {
    # CLI 기본값
    'DEFAULT_RING': 'int',
    'DEFAULT_SEED': 7,
    'DEFAULT_TRIALS': 10,

    # exhaustive_solutions 가 허용하는 최대 상태 수 (2*bound+1)^(n*n)
    'EXHAUSTIVE_STATE_CEILING': 100000,

    # 무작위 인스턴스 생성
    'RANDOM_ENTRY_BOUND': 5,
    'RANDOM_POLY_DEGREE': 2,
    'PERTURBATION_STEPS': 6,
}

# ========================================
# 로깅 설정
# ========================================
# 행렬 출력은 stdout, 로그는 stderr 로만 나갑니다.
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '[{levelname}] {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}
