import logging
import sys

from src.cli.arguments import parse_arguments
from src.cli.handlers import execute
from src.utils.errors import CapacityError, InputError
from src.utils.logging_setup import setup_logging

EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_IO = 4


def main(argv=None) -> int:
    args = parse_arguments(argv)
    setup_logging(level=logging.DEBUG if args.verbose else logging.INFO)
    logger = logging.getLogger(__name__)

    logger.info(f"Forest complex toolkit - {args.command}")
    logger.debug(f"Arguments: {args}")

    try:
        code = execute(args)
        logger.info(f"Command {args.command} finished with exit code {code}.")
        return code
    except InputError as e:
        logger.error(f"Invalid input: {e}", exc_info=args.verbose)
        return EXIT_USAGE
    except CapacityError as e:
        logger.error(f"Budget exceeded: {e}", exc_info=args.verbose)
        return EXIT_RESOURCE
    except OSError as e:
        logger.error(f"I/O error: {e}", exc_info=args.verbose)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
