package com.acme.util;

/**
 * Fill settings.
 *
 * @author Ada
 * @version 1.2
 */
public class Style {
    private Color fill;

    public Style(Color fill) {
        this.fill = fill;
    }

    public Color getFill() {
        return fill;
    }
}
