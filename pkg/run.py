"""Runner used to run the vknot command line application."""

from app.main import main

if __name__ == "__main__":
    main()
