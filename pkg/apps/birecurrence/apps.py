from django.apps import AppConfig

class BirecurrenceConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.birecurrence'
