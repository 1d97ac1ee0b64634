from django.apps import AppConfig

class MonoidConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.monoid'
