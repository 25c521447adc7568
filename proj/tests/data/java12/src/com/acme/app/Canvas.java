package com.acme.app;

import com.acme.core.*;
import com.acme.util.Registry;

/**
 * @author Grace
 */
public class Canvas {
    private Registry<Shape> shapes;
    private java.util.List<Circle> circles;
    private int count = compute(new Square(null, 1) { });
    private String text = "class Bogus extends Canvas {";
    // class Commented extends Canvas {}

    public void draw(Shape s, com.acme.util.Style style) throws RenderException {
        if (s == null) {
            throw new RenderException("empty", this);
        }
    }

    private static int compute(Object o) {
        return 1;
    }
}
