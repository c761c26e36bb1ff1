import sys

from application import Application

if __name__ == "__main__":
    exit_code, output = Application().run(sys.argv[1:])
    sys.stdout.write(output)
    sys.exit(exit_code)
