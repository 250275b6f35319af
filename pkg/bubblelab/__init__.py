# __name__ = "bubblelab"
__version__ = "0.1.0"
__author__ = ["bubblelab developers"]
