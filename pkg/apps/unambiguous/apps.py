from django.apps import AppConfig

class UnambiguousConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.unambiguous'
