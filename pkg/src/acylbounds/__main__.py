"""Entry point for the acylbounds command."""

import sys


def setup_logging():
    """Setup application logging."""
    from acylbounds.utils.logger import setup_logging as init_logging

    logger = init_logging()

    # Setup exception hook to log crashes
    def exception_hook(exc_type, exc_value, exc_tb):
        logger.critical("Uncaught exception", exc_info=(exc_type, exc_value, exc_tb))
        sys.__excepthook__(exc_type, exc_value, exc_tb)

    sys.excepthook = exception_hook
    logger.debug("Exception hook installed")
    return logger


def main():
    _logger = setup_logging()
    _logger.debug(f"main() started with {sys.argv[1:]}")

    from acylbounds.cli import run_cli

    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
