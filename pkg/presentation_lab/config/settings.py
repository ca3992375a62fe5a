import os

# dotenv - опционально (в CI может не быть установлен)
try:
    from dotenv import load_dotenv
    load_dotenv()
except Exception:
    pass


class Config:
    # Арифметический бюджет: максимальный размер целого в битах
    BUDGET_BITS = int(os.getenv("PL_BUDGET_BITS", str(2 ** 20)))

    # Башня E_n
    TOWER_EXACT_MAX    = 5
    CONCRETE_TOWER_MAX = int(os.getenv("PL_CONCRETE_TOWER_MAX", "4"))

    # Раскрывать блоки в буквы только до этого размера
    LETTER_LIMIT = int(os.getenv("PL_LETTER_LIMIT", "5000000"))

    # Small cancellation
    BAND_WINDOW = int(os.getenv("PL_BAND_WINDOW", "8"))

    # Area oracle bounds
    AREA_MAX        = int(os.getenv("PL_AREA_MAX",        "64"))
    AREA_MAX_LEN    = int(os.getenv("PL_AREA_MAX_LEN",    "96"))
    AREA_NODE_LIMIT = int(os.getenv("PL_AREA_NODE_LIMIT", "2000000"))
    AREA_TIME_LIMIT = float(os.getenv("PL_AREA_TIME_LIMIT", "0"))      # 0 - без лимита

    # Приёмочные проверки: лимит одного поиска и всей проверки, секунды
    ACCEPT_SEARCH_SECONDS = float(os.getenv("PL_ACCEPT_SEARCH_SECONDS", "60"))
    ACCEPT_CHECK_SECONDS  = float(os.getenv("PL_ACCEPT_CHECK_SECONDS",  "300"))
    ACCEPT_NODE_LIMIT     = int(os.getenv("PL_ACCEPT_NODE_LIMIT",       "200000"))

    # Seed для случайных проверок
    RANDOM_SEED = int(os.getenv("PL_RANDOM_SEED", "20240501"))

    LOG_LEVEL = os.getenv("PL_LOG_LEVEL", "WARNING")

    # Коды выхода CLI
    EXIT_CODES = {
        "true":   0,
        "false":  1,
        "usage":  2,
        "budget": 3,
    }
