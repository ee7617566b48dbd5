"""
Логгер на запуск.

Каждый запуск CLI получает свой логгер (имя с меткой времени), а все модули
пакета пишут в дочерние логгеры ``powerplanar.*`` через logging.getLogger(__name__).
Если задан log_dir, записи уходят ещё и в файл ``run_<ts>.log``.
"""
from datetime import datetime
from pathlib import Path

import logging

PACKAGE_LOGGER = "powerplanar"
LOG_FORMAT = "%(asctime)s | %(levelname)s | %(message)s"


def create_run_logger(
        log_dir: str | Path | None = None,
        *,
        level: int = logging.INFO,
) -> logging.Logger:
    """
    Создаёт логгер запуска и подключает к нему логгер пакета.

    :param log_dir: Каталог для файла лога. None - писать только в stderr.
    :param level: Уровень логирования для пакета.
    :return: Логгер с атрибутом ``log_file`` (Path или None).
    """
    # Микросекунды -> уникально для быстрых тестов
    ts = datetime.now().strftime("%Y%m%d_%H%M%S_%f")

    logger = logging.getLogger(f"{PACKAGE_LOGGER}.run_{ts}")
    logger.setLevel(level)

    package = logging.getLogger(PACKAGE_LOGGER)
    package.setLevel(level)
    formatter = logging.Formatter(LOG_FORMAT)

    # один консольный handler на пакет, сколько бы запусков ни было в процессе
    if not any(getattr(h, "_powerplanar_console", False) for h in package.handlers):
        console = logging.StreamHandler()
        console.setFormatter(formatter)
        console.setLevel(logging.WARNING)
        console._powerplanar_console = True  # type: ignore[attr-defined]
        package.addHandler(console)

    filename: Path | None = None
    if log_dir is not None:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        filename = log_path / f"run_{ts}.log"
        handler = logging.FileHandler(filename, encoding="utf-8")
        handler.setFormatter(formatter)
        package.addHandler(handler)

    logger.log_file = filename  # type: ignore[attr-defined]

    logger.info("START")
    logger.info("Log file: %s", filename)
    return logger


def close_run_logger(logger: logging.Logger) -> None:
    """Отключает файловый handler запуска (нужно в тестах с tmp_path)."""
    log_file = getattr(logger, "log_file", None)
    if log_file is None:
        return
    package = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(package.handlers):
        if isinstance(handler, logging.FileHandler) and Path(handler.baseFilename) == Path(log_file).resolve():
            logger.info("QUIT")
            handler.close()
            package.removeHandler(handler)
