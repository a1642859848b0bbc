"""
Лаборатория экспериментов: реестр экспериментов, раннер с независимыми
потоками ГПСЧ на реплику, статистика против оракулов и выгрузка результатов.
"""
