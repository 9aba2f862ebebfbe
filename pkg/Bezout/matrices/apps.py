from django.apps import AppConfig


class MatricesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'matrices'
