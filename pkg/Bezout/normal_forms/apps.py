from django.apps import AppConfig


class NormalFormsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'normal_forms'
