import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Bezout.settings')
django.setup()
