"""Allow the toolkit to be run as a module."""
from cli import run

if __name__ == "__main__":
    run()
