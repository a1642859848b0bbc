# Generated by Django 5.2.6 on 2026-10-19 12:00

import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ExperimentRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(db_index=True, max_length=64, verbose_name='Эксперимент')),
                ('params', models.JSONField(blank=True, default=dict, verbose_name='Параметры')),
                ('seed', models.BigIntegerField(verbose_name='Seed')),
                ('stream_base', models.BigIntegerField(default=0, verbose_name='Первый поток')),
                ('code_version', models.CharField(max_length=32, verbose_name='Версия кода')),
                ('replicas', models.PositiveIntegerField(verbose_name='Реплик')),
                ('errors', models.PositiveIntegerField(default=0, verbose_name='Ошибок')),
                ('summary', models.JSONField(blank=True, default=list, verbose_name='Сводка')),
                ('rows_path', models.CharField(blank=True, default='', max_length=512, verbose_name='Файл строк')),
                ('created_at', models.DateTimeField(db_index=True, default=django.utils.timezone.now, verbose_name='Создан')),
            ],
            options={
                'verbose_name': 'Прогон эксперимента',
                'verbose_name_plural': 'Прогоны экспериментов',
                'db_table': 'quad_experiment_run',
                'ordering': ['-created_at'],
                'indexes': [models.Index(fields=['name', 'seed', 'stream_base'], name='idx_run_name_seed')],
            },
        ),
    ]
