from django.apps import AppConfig


class AppQuadConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'app_quad'
    verbose_name = 'Квадрангуляции'
